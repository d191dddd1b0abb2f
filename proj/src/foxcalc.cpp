#include "hg/foxcalc.hpp"

namespace hg {

GR fox_left(const Word& w, GenKind k, int idx) {
  GR out;
  Word prefix;
  for (const auto& l : w.letters()) {
    if (l.kind == k && l.idx == idx) {
      if (l.exp > 0) {
        out.add_term(prefix, Rat(1));
      } else {
        out.add_term(prefix * Word::gen(l.kind, l.idx, -1), Rat(-1));
      }
    }
    prefix = prefix * Word::gen(l.kind, l.idx, l.exp);
  }
  return out;
}

GR fox_left(const GR& u, GenKind k, int idx) {
  GR out;
  for (const auto& [w, c] : u.terms()) out = out + fox_left(w, k, idx) * c;
  return out;
}

GR fox_right(const Word& w, GenKind k, int idx) {
  GR out;
  Word suffix;
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->kind == k && it->idx == idx) {
      if (it->exp > 0) {
        out.add_term(suffix, Rat(1));
      } else {
        out.add_term(Word::gen(it->kind, it->idx, -1) * suffix, Rat(-1));
      }
    }
    suffix = Word::gen(it->kind, it->idx, it->exp) * suffix;
  }
  return out;
}

GR fox_right(const GR& u, GenKind k, int idx) {
  GR out;
  for (const auto& [w, c] : u.terms()) out = out + fox_right(w, k, idx) * c;
  return out;
}

namespace {
GenKind row_kind(int i, int g) { return i < g ? GenKind::A : GenKind::B; }
int row_idx(int i, int g) { return i < g ? i + 1 : i - g + 1; }
}  // namespace

Mat jacobian(const Endo& f) {
  int g = f.genus();
  Mat m(2 * g, 2 * g);
  for (int j = 0; j < 2 * g; ++j) {
    Word im = j < g ? f.image_a(j + 1) : f.image_b(j - g + 1);
    for (int i = 0; i < 2 * g; ++i) {
      m.at(i, j) = fox_left(im, row_kind(i, g), row_idx(i, g)).antipode();
    }
  }
  return m;
}

Mat jacobian_F(const Endo& f) {
  for (int i = 1; i <= f.genus(); ++i)
    if (!in_A(f.image_a(i))) throw WordError("jacobian_F: endo does not preserve A");
  return jacobian(f).map_entries([](const GR& u) { return varpi(u); });
}

namespace {
Mat block(const Mat& m, int r0, int c0, int n) {
  Mat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = m.at(r0 + i, c0 + j);
  return b;
}
}  // namespace

Mat mag00(const Endo& f) {
  int g = f.genus();
  return block(jacobian_F(f), g, g, g);
}

Mat mag10(const Endo& f) {
  int g = f.genus();
  return block(jacobian_F(f), 0, 0, g);
}

Mat mag01(const Endo& f) {
  int g = f.genus();
  Mat jf = jacobian_F(f);
  Mat id = Mat::identity(g);
  if (!(block(jf, 0, 0, g) == id) || !(block(jf, g, g, g) == id))
    throw WordError("mag01: diagonal blocks are not the identity (f not in the twist group)");
  return block(jf, 0, g, g);
}

std::vector<GR> kappa(const Word& a, int genus) {
  if (!in_A(a)) throw WordError("kappa: word is not in A");
  std::vector<GR> row;
  for (int i = 1; i <= genus; ++i) row.push_back(varpi(fox_left(a, GenKind::A, i)));
  return row;
}

bool hermitian_check(const Endo& f) {
  Mat m = mag01(f);
  return m == m.dagger();
}

}  // namespace hg

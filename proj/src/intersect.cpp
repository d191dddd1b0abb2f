#include "hg/intersect.hpp"

#include <sstream>

#include "hg/envelope.hpp"

namespace hg {

void TensorPair::add_term(const Word& l, const Word& r, const Rat& c) {
  if (c == 0) return;
  auto k = std::make_pair(l, r);
  auto& x = t_[k];
  x += c;
  if (x == 0) t_.erase(k);
}

TensorPair TensorPair::operator+(const TensorPair& o) const {
  TensorPair out = *this;
  for (const auto& [k, c] : o.t_) out.add_term(k.first, k.second, c);
  return out;
}
TensorPair TensorPair::operator-(const TensorPair& o) const { return *this + (-o); }
TensorPair TensorPair::operator-() const {
  TensorPair out;
  for (const auto& [k, c] : t_) out.t_[k] = -c;
  return out;
}
TensorPair TensorPair::operator*(const Rat& c) const {
  TensorPair out;
  if (c == 0) return out;
  for (const auto& [k, x] : t_) out.t_[k] = x * c;
  return out;
}

void TensorA::add_term(const Word& f, const Letter& l, const Rat& c) {
  if (c == 0) return;
  auto k = std::make_pair(f, l);
  auto& x = t_[k];
  x += c;
  if (x == 0) t_.erase(k);
}

TensorA TensorA::operator+(const TensorA& o) const {
  TensorA out = *this;
  for (const auto& [k, c] : o.t_) out.add_term(k.first, k.second, c);
  return out;
}
TensorA TensorA::operator-(const TensorA& o) const { return *this + (-o); }
TensorA TensorA::operator-() const {
  TensorA out;
  for (const auto& [k, c] : t_) out.t_[k] = -c;
  return out;
}
TensorA TensorA::operator*(const Rat& c) const {
  TensorA out;
  if (c == 0) return out;
  for (const auto& [k, x] : t_) out.t_[k] = x * c;
  return out;
}

namespace {
std::string word_or_one(const Word& w) { return w.is_identity() ? "1" : w.str(); }

template <typename Map>
std::string sum_str(const Map& t, auto&& key_str) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << a << '*' << key_str(k);
  }
  return os.str();
}
}  // namespace

std::string TensorPair::str() const {
  return sum_str(t_, [](const auto& k) {
    return "(" + word_or_one(k.first) + " | " + word_or_one(k.second) + ")";
  });
}

std::string TensorA::str() const {
  return sum_str(t_, [](const auto& k) {
    return "(" + word_or_one(k.first) + " | " + letter_str(k.second) + ")";
  });
}

Mat e_matrix(int genus) {
  const int g = genus;
  auto gen = [&](int z) {  // z in 0..2g-1: alpha_1..alpha_g, beta_1..beta_g
    return z < g ? Word::gen(GenKind::A, z + 1) : Word::gen(GenKind::B, z - g + 1);
  };
  auto P = [&](const Word& x, const Word& y) {
    return (GR::of(x) - GR(1)) * (GR::of(y) - GR(1)) * Rat(-1);
  };
  Mat e(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i) {
    for (int j = 0; j < 2 * g; ++j) {
      int bi = i / g, bj = j / g, ii = i % g, jj = j % g;
      if (ii > jj) {
        e.at(i, j) = P(gen(i), gen(j));
      } else if (ii == jj) {
        if (bi == 0 && bj == 0) {
          e.at(i, j) = GR::of(gen(i)) - GR(1);  // alpha_i - 1
        } else if (bi == 0 && bj == 1) {
          e.at(i, j) = GR::of(gen(i)) + GR::of(gen(j)) - GR(1);
        } else if (bi == 1 && bj == 0) {
          e.at(i, j) = -GR(1);
        } else {
          e.at(i, j) = GR::of(gen(i)) - GR(1);  // beta_i - 1
        }
      }
    }
  }
  return e;
}

namespace {
int max_idx(const Word& w, int acc = 1) {
  for (const auto& s : w.syllables()) acc = std::max(acc, s.idx);
  return acc;
}
int max_idx(const GR& u) {
  int g = 1;
  for (const auto& [w, c] : u.terms()) g = max_idx(w, g);
  return g;
}
int max_idx(const LieElt& u) {
  int g = 1;
  for (const auto& [w, c] : u.terms())
    for (const auto& l : w) g = std::max(max_idx(l.f, g), l.idx);
  return g;
}
}  // namespace

GR eta(const GR& x, const GR& y) {
  int g = std::max(max_idx(x), max_idx(y));
  Mat e = e_matrix(g);
  GR out;
  auto kind = [&](int z) { return z < g ? GenKind::A : GenKind::B; };
  auto idx = [&](int z) { return z < g ? z + 1 : z - g + 1; };
  for (int i = 0; i < 2 * g; ++i) {
    GR dx = fox_left(x, kind(i), idx(i));
    if (dx.is_zero()) continue;
    for (int j = 0; j < 2 * g; ++j) {
      if (e.at(i, j).is_zero()) continue;
      GR dy = fox_right(y, kind(j), idx(j));
      if (dy.is_zero()) continue;
      out = out + dx * e.at(i, j) * dy;
    }
  }
  return out;
}

GR eta(const Word& x, const Word& y) { return eta(GR::of(x), GR::of(y)); }

namespace {
Word beta_lift(const Word& f) {
  Word out;
  for (const auto& s : f.syllables()) {
    if (s.kind != GenKind::X) throw WordError("expected a word over the x's");
    out = out * Word::gen(GenKind::B, s.idx, s.exp);
  }
  return out;
}

void check_aelt(const LieElt& a) {
  if (!a.is_zero() && a.max_degree() > 1)
    throw WordError("expected a degree-1 element of the module");
}

// <w, ^f a_i> = -(dw/dx_i) f^{-1} for a single F-word w
GR pair_word_letter(const Word& w, const Letter& l) {
  return -(fox_left(w, GenKind::X, l.idx) * GR::of(l.f.inverse()));
}
}  // namespace

GR pairing(const GR& x, const LieElt& a) {
  check_aelt(a);
  GR out;
  for (const auto& [w, cx] : x.terms())
    for (const auto& [key, ca] : a.terms()) out = out + pair_word_letter(w, key[0]) * (cx * ca);
  // independent route: lift both arguments and project eta
  GR lift_x = x.map_words(beta_lift);
  GR check;
  for (const auto& [key, ca] : a.terms()) {
    Word lift_a = Word::gen(GenKind::A, key[0].idx).conj(beta_lift(key[0].f));
    check = check + varpi(eta(lift_x, GR::of(lift_a))) * ca;
  }
  if (!(check == out)) throw WordError("internal: pairing routes disagree");
  return out;
}

TensorPair theta_pair(const GR& x, const LieElt& a) {
  check_aelt(a);
  TensorPair out;
  for (const auto& [w, cx] : x.terms()) {
    for (const auto& [key, ca] : a.terms()) {
      GR p = pair_word_letter(w, key[0]);
      for (const auto& [t, c] : p.terms())
        out.add_term(t.inverse() * w, t, c * cx * ca);
    }
  }
  return out;
}

namespace {
Word head_of(const Word& f) {
  const Syl& s = f.syllables().front();
  return Word::gen(s.kind, s.idx, s.exp > 0 ? 1 : -1);
}

TensorA psi_letters(const Letter& a, const Letter& b, bool left_first) {
  bool peel_a = !a.f.is_identity();
  bool peel_b = !b.f.is_identity();
  if (peel_a && peel_b) {
    if (!left_first) peel_a = false;
  }
  TensorA out;
  if (peel_a) {
    Word s = head_of(a.f);
    Letter a2{s.inverse() * a.f, a.idx};
    TensorA rec = psi_letters(a2, b, left_first);
    for (const auto& [k, c] : rec.terms())
      out.add_term(s * k.first, k.second, c);
    GR p = pair_word_letter(s, b);  // Theta(s, b) = sum c_t (t^-1 s | t)
    for (const auto& [t, c] : p.terms())
      out.add_term(t, Letter{t.inverse() * s * a2.f, a2.idx}, -c);
    return out;
  }
  if (peel_b) {
    Word y = head_of(b.f);
    Letter b2{y.inverse() * b.f, b.idx};
    TensorA rec = psi_letters(a, b2, left_first);
    for (const auto& [k, c] : rec.terms())
      out.add_term(k.first * y.inverse(), Letter{y * k.second.f, k.second.idx}, c);
    GR p = pair_word_letter(y, a);
    for (const auto& [h, c] : p.terms())
      out.add_term(h.inverse(), Letter{y * b2.f, b2.idx}, -c);
    return out;
  }
  if (a.idx == b.idx) out.add_term(Word(), Letter{Word(), a.idx}, Rat(1));
  return out;
}

TensorA psi_impl(const LieElt& a, const LieElt& b, bool left_first) {
  check_aelt(a);
  check_aelt(b);
  TensorA out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out = out + psi_letters(ka[0], kb[0], left_first) * (ca * cb);
  return out;
}
}  // namespace

TensorA psi(const LieElt& a, const LieElt& b) { return psi_impl(a, b, true); }
TensorA psi_alt(const LieElt& a, const LieElt& b) { return psi_impl(a, b, false); }

TensorA psi_oracle(const Word& a, const Word& b) {
  if (!in_A(a) || !in_A(b)) throw WordError("psi_oracle expects words in A");
  int g = std::max(max_idx(a), max_idx(b));
  GR j = eta(GR::of(a), GR::of(b));
  TensorA out;
  for (const auto& [w, c] : j.terms()) {
    Word f = varpi(w);
    Word apart = beta_lift(f).inverse() * w;
    if (!in_A(apart)) throw WordError("internal: A-part of a J-term is not in A");
    LieElt cls = class_of(apart, g, 1);
    for (const auto& [key, cc] : cls.terms()) out.add_term(f, key[0], c * cc);
  }
  return out;
}

}  // namespace hg

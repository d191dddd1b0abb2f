#include "hg/words.hpp"

#include <sstream>

namespace hg {

void Word::push_reduced(GenKind k, int idx, long exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().kind == k && syl_.back().idx == idx) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({k, idx, exp});
}

Word Word::gen(GenKind k, int idx, long exp) {
  if (idx < 1) throw WordError("generator index must be >= 1");
  Word w;
  w.push_reduced(k, idx, exp);
  return w;
}

Word Word::from_syllables(const std::vector<Syl>& raw) {
  Word w;
  for (const auto& s : raw) {
    if (s.idx < 1) throw WordError("generator index must be >= 1");
    w.push_reduced(s.kind, s.idx, s.exp);
  }
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

std::vector<Syl> Word::letters() const {
  std::vector<Syl> out;
  out.reserve(length());
  for (const auto& s : syl_) {
    long n = s.exp < 0 ? -s.exp : s.exp;
    long e = s.exp < 0 ? -1 : 1;
    for (long t = 0; t < n; ++t) out.push_back({s.kind, s.idx, e});
  }
  return out;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (const auto& s : o.syl_) w.push_reduced(s.kind, s.idx, s.exp);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    w.syl_.push_back({it->kind, it->idx, -it->exp});
  return w;
}

Word Word::pow(long n) const {
  Word acc;
  Word base = n < 0 ? inverse() : *this;
  long k = n < 0 ? -n : n;
  for (long t = 0; t < k; ++t) acc = acc * base;
  return acc;
}

Word Word::conj(const Word& x) const { return x * (*this) * x.inverse(); }

Word Word::commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

namespace {
// Rank of a single letter for the lexicographic order.
int letter_rank(const Syl& s) {
  return (static_cast<int>(s.kind) << 24) + (s.idx << 1) + (s.exp < 0 ? 1 : 0);
}
}  // namespace

bool Word::operator<(const Word& o) const {
  std::size_t la = length(), lb = o.length();
  if (la != lb) return la < lb;
  auto A = letters(), B = o.letters();
  for (std::size_t i = 0; i < A.size(); ++i) {
    int ra = letter_rank(A[i]), rb = letter_rank(B[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string Word::str() const {
  if (syl_.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << ' ';
    first = false;
    switch (s.kind) {
      case GenKind::A: os << 'a'; break;
      case GenKind::B: os << 'b'; break;
      case GenKind::X: os << 'x'; break;
    }
    os << s.idx;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    GenKind k;
    switch (tok[0]) {
      case 'a': k = GenKind::A; break;
      case 'b': k = GenKind::B; break;
      case 'x': k = GenKind::X; break;
      default: throw WordError("bad generator letter in token '" + tok + "'");
    }
    std::size_t pos = 1;
    std::size_t caret = tok.find('^');
    std::string idx_part = tok.substr(pos, (caret == std::string::npos ? tok.size() : caret) - pos);
    if (idx_part.empty()) throw WordError("missing index in token '" + tok + "'");
    int idx = 0;
    try {
      idx = std::stoi(idx_part);
    } catch (...) {
      throw WordError("bad index in token '" + tok + "'");
    }
    long exp = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      try {
        exp = std::stol(e);
      } catch (...) {
        throw WordError("bad exponent in token '" + tok + "'");
      }
    }
    if (idx < 1) throw WordError("generator index must be >= 1 in '" + tok + "'");
    w.push_reduced(k, idx, exp);
  }
  return w;
}

Word varpi(const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.kind == GenKind::A) continue;
    if (s.kind == GenKind::X) throw WordError("varpi expects a word over pi");
    out = out * Word::gen(GenKind::X, s.idx, s.exp);
  }
  return out;
}

bool in_A(const Word& w) { return varpi(w).is_identity(); }

Word zeta(int genus) {
  if (genus < 1) throw WordError("genus must be >= 1");
  Word z;
  for (int i = 1; i <= genus; ++i) {
    z = z * Word::commutator(Word::gen(GenKind::B, i, -1), Word::gen(GenKind::A, i));
  }
  return z.inverse();
}

Endo::Endo(int genus, std::vector<Word> im_a, std::vector<Word> im_b)
    : g_(genus), ima_(std::move(im_a)), imb_(std::move(im_b)) {
  if (g_ < 1) throw WordError("genus must be >= 1");
  if (ima_.size() != static_cast<std::size_t>(g_) ||
      imb_.size() != static_cast<std::size_t>(g_))
    throw WordError("endo needs g alpha-images and g beta-images");
}

const Endo& Endo::inverse_endo() const {
  if (!inv_) throw WordError("inverse images not available");
  return inv_->front();
}

void Endo::set_inverse(Endo inv) {
  // keep one level of back-reference so the stored inverse is itself usable
  Endo back(g_, ima_, imb_);
  inv.inv_ = std::vector<Endo>{std::move(back)};
  inv_ = std::vector<Endo>{std::move(inv)};
}

Word Endo::apply(const Word& w) const {
  Word out;
  for (const auto& s : w.syllables()) {
    const Word* im = nullptr;
    switch (s.kind) {
      case GenKind::A: im = &image_a(s.idx); break;
      case GenKind::B: im = &image_b(s.idx); break;
      case GenKind::X: throw WordError("endo applies to words over pi");
    }
    out = out * im->pow(s.exp);
  }
  return out;
}

Endo Endo::compose(const Endo& other) const {
  if (g_ != other.g_) throw WordError("genus mismatch in compose");
  std::vector<Word> ia, ib;
  for (int i = 1; i <= g_; ++i) ia.push_back(apply(other.image_a(i)));
  for (int j = 1; j <= g_; ++j) ib.push_back(apply(other.image_b(j)));
  Endo r(g_, std::move(ia), std::move(ib));
  if (inv_ && other.inv_) r.set_inverse(other.inverse_endo().compose(inverse_endo()));
  return r;
}

bool Endo::is_identity_images() const {
  for (int i = 1; i <= g_; ++i)
    if (image_a(i) != Word::gen(GenKind::A, i)) return false;
  for (int j = 1; j <= g_; ++j)
    if (image_b(j) != Word::gen(GenKind::B, j)) return false;
  return true;
}

std::string to_string(PairCheck c) {
  switch (c) {
    case PairCheck::OK: return "OK";
    case PairCheck::NOT_INVERTIBLE: return "NOT_INVERTIBLE";
    case PairCheck::NOT_A_PRESERVING: return "NOT_A_PRESERVING";
    case PairCheck::NOT_ZETA_FIXING: return "NOT_ZETA_FIXING";
  }
  return "?";
}

PairCheck verify_G_membership(const Endo& f) {
  if (!f.has_inverse()) throw WordError("verify needs inverse images");
  const Endo& fi = f.inverse_endo();
  if (!f.compose(fi).is_identity_images() || !fi.compose(f).is_identity_images())
    return PairCheck::NOT_INVERTIBLE;
  for (int i = 1; i <= f.genus(); ++i) {
    if (!in_A(f.image_a(i)) || !in_A(fi.image_a(i))) return PairCheck::NOT_A_PRESERVING;
  }
  return PairCheck::OK;
}

PairCheck verify_pair_automorphism(const Endo& f) {
  PairCheck c = verify_G_membership(f);
  if (c != PairCheck::OK) return c;
  Word z = zeta(f.genus());
  if (f.apply(z) != z) return PairCheck::NOT_ZETA_FIXING;
  return PairCheck::OK;
}

namespace {
std::vector<Word> id_images(int g, GenKind k) {
  std::vector<Word> v;
  for (int i = 1; i <= g; ++i) v.push_back(Word::gen(k, i));
  return v;
}
void require_beta_word(const Word& x) {
  for (const auto& s : x.syllables())
    if (s.kind != GenKind::B) throw WordError("conjugator must be a word over the beta's");
}
}  // namespace

Endo identity_endo(int genus) {
  Endo e(genus, id_images(genus, GenKind::A), id_images(genus, GenKind::B));
  e.set_inverse(Endo(genus, id_images(genus, GenKind::A), id_images(genus, GenKind::B)));
  return e;
}

Endo twist_alpha(int genus, int i) {
  if (i < 1 || i > genus) throw WordError("twist_alpha index out of range");
  auto ia = id_images(genus, GenKind::A);
  auto ib = id_images(genus, GenKind::B);
  ib[i - 1] = Word::gen(GenKind::A, i) * Word::gen(GenKind::B, i);
  auto ja = id_images(genus, GenKind::A);
  auto jb = id_images(genus, GenKind::B);
  jb[i - 1] = Word::gen(GenKind::A, i, -1) * Word::gen(GenKind::B, i);
  Endo e(genus, ia, ib);
  e.set_inverse(Endo(genus, ja, jb));
  return e;
}

Endo twist_boundary(int genus) {
  Word z = zeta(genus);
  std::vector<Word> ia, ib, ja, jb;
  for (int i = 1; i <= genus; ++i) {
    ia.push_back(Word::gen(GenKind::A, i).conj(z));
    ja.push_back(Word::gen(GenKind::A, i).conj(z.inverse()));
  }
  for (int j = 1; j <= genus; ++j) {
    ib.push_back(Word::gen(GenKind::B, j).conj(z));
    jb.push_back(Word::gen(GenKind::B, j).conj(z.inverse()));
  }
  Endo e(genus, ia, ib);
  e.set_inverse(Endo(genus, ja, jb));
  return e;
}

Endo elem_d(int genus, int i, int eps, const Word& x) {
  if (i < 1 || i > genus) throw WordError("elem_d index out of range");
  if (eps != 1 && eps != -1) throw WordError("elem_d sign must be +1 or -1");
  require_beta_word(x);
  auto ia = id_images(genus, GenKind::A);
  auto ib = id_images(genus, GenKind::B);
  ia[i - 1] = x.inverse() * Word::gen(GenKind::A, i, eps) * x;
  auto ja = id_images(genus, GenKind::A);
  auto jb = id_images(genus, GenKind::B);
  ja[i - 1] = x * Word::gen(GenKind::A, i, eps) * x.inverse();
  Endo e(genus, ia, ib);
  e.set_inverse(Endo(genus, ja, jb));
  return e;
}

Endo elem_e(int genus, int i, int j, const Word& x) {
  if (i == j) throw WordError("elem_e needs i != j");
  if (i < 1 || i > genus || j < 1 || j > genus) throw WordError("elem_e index out of range");
  require_beta_word(x);
  Word c = x.inverse() * Word::gen(GenKind::A, i) * x;
  auto ia = id_images(genus, GenKind::A);
  auto ib = id_images(genus, GenKind::B);
  ia[j - 1] = c * Word::gen(GenKind::A, j);
  auto ja = id_images(genus, GenKind::A);
  auto jb = id_images(genus, GenKind::B);
  ja[j - 1] = c.inverse() * Word::gen(GenKind::A, j);
  Endo e(genus, ia, ib);
  e.set_inverse(Endo(genus, ja, jb));
  return e;
}

Endo phi(int genus, int i, int s, const Word& b) {
  if (i < 1 || i > genus || s < 1 || s > genus) throw WordError("phi index out of range");
  require_beta_word(b);
  // c: alpha_s -> b alpha_s b^{-1}
  Endo c = elem_d(genus, s, 1, b.inverse());
  // m: beta_i -> alpha_s beta_i
  auto ia = id_images(genus, GenKind::A);
  auto ib = id_images(genus, GenKind::B);
  ib[i - 1] = Word::gen(GenKind::A, s) * Word::gen(GenKind::B, i);
  auto ja = id_images(genus, GenKind::A);
  auto jb = id_images(genus, GenKind::B);
  jb[i - 1] = Word::gen(GenKind::A, s, -1) * Word::gen(GenKind::B, i);
  Endo m(genus, ia, ib);
  m.set_inverse(Endo(genus, ja, jb));
  Endo cinv = elem_d(genus, s, 1, b);  // alpha_s -> b^{-1} alpha_s b
  return c.compose(m).compose(cinv);
}

Endo aut_F_lift(int genus, const std::vector<Word>& x_images,
                const std::vector<Word>& x_inverse_images) {
  if (x_images.size() != static_cast<std::size_t>(genus) ||
      x_inverse_images.size() != static_cast<std::size_t>(genus))
    throw WordError("aut_F_lift needs g images and g inverse images");
  auto to_beta = [](const Word& w) {
    Word out;
    for (const auto& s : w.syllables()) {
      if (s.kind == GenKind::A) throw WordError("aut_F_lift images must avoid alpha letters");
      out = out * Word::gen(GenKind::B, s.idx, s.exp);
    }
    return out;
  };
  auto ia = id_images(genus, GenKind::A);
  std::vector<Word> ib, jb;
  for (const auto& w : x_images) ib.push_back(to_beta(w));
  for (const auto& w : x_inverse_images) jb.push_back(to_beta(w));
  Endo e(genus, ia, ib);
  e.set_inverse(Endo(genus, id_images(genus, GenKind::A), jb));
  return e;
}

}  // namespace hg

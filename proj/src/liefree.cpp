#include "hg/liefree.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

bool TWordLess::operator()(const TWord& a, const TWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return a[i] < b[i];
  }
  return false;
}

namespace {
// plain lexicographic order (prefix < extension), used for Lyndon tests
bool lex_less(const TWord& a, const TWord& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Letter& x, const Letter& y) { return x < y; });
}

TWord suffix_of(const TWord& w, std::size_t k) { return TWord(w.begin() + k, w.end()); }

// position of the standard factorization w = u v, v the lex-least proper suffix
std::size_t std_split(const TWord& w) {
  std::size_t best = 1;
  TWord bv = suffix_of(w, 1);
  for (std::size_t k = 2; k < w.size(); ++k) {
    TWord s = suffix_of(w, k);
    if (lex_less(s, bv)) {
      bv = std::move(s);
      best = k;
    }
  }
  return best;
}

TMap concat(const TMap& a, const TMap& b) {
  TMap out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      TWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto& c = out[w];
      c += ca * cb;
      if (c == 0) out.erase(w);
    }
  return out;
}

TMap tmap_add(TMap a, const TMap& b, const Rat& scale = Rat(1)) {
  for (const auto& [w, c] : b) {
    auto& x = a[w];
    x += c * scale;
    if (x == 0) a.erase(w);
  }
  return a;
}

// tensor expansion of the standard bracketing; memoized (idempotent fill)
const TMap& lyndon_tensor_memo(const TWord& w) {
  thread_local std::map<TWord, TMap, TWordLess> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  TMap out;
  if (w.size() == 1) {
    out.emplace(w, Rat(1));
  } else {
    std::size_t k = std_split(w);
    const TMap& a = lyndon_tensor_memo(TWord(w.begin(), w.begin() + k));
    const TMap& b = lyndon_tensor_memo(suffix_of(w, k));
    out = tmap_add(concat(a, b), concat(b, a), Rat(-1));
  }
  return cache.emplace(w, std::move(out)).first->second;
}

// same, with every letter translated on the way out
TMap bracket_tensor(const TWord& w, const Word& translate) {
  const TMap& base = lyndon_tensor_memo(w);
  if (translate.is_identity()) return base;
  TMap out;
  for (const auto& [v, c] : base) {
    TWord nv = v;
    for (auto& l : nv) l.f = translate * l.f;
    out.emplace(std::move(nv), c);
  }
  return out;
}
}  // namespace

std::size_t lyndon_split(const TWord& w) { return std_split(w); }

bool is_lyndon(const TWord& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!lex_less(w, suffix_of(w, k))) return false;
  }
  return true;
}

TMap lyndon_tensor(const TWord& w) { return bracket_tensor(w, Word()); }

LieElt LieElt::letter(const Word& f, int idx) {
  if (idx < 1) throw WordError("letter index must be >= 1");
  LieElt u;
  u.add_term(TWord{Letter{f, idx}}, Rat(1));
  return u;
}

void LieElt::add_term(const TWord& w, const Rat& c) {
  if (c == 0) return;
  if (!is_lyndon(w)) throw WordError("LieElt keys must be Lyndon words");
  auto& x = t_[w];
  x += c;
  if (x == 0) t_.erase(w);
}

Rat LieElt::coeff(const TWord& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Rat(0) : it->second;
}

int LieElt::min_degree() const {
  return t_.empty() ? 0 : static_cast<int>(t_.begin()->first.size());
}

int LieElt::max_degree() const {
  return t_.empty() ? 0 : static_cast<int>(t_.rbegin()->first.size());
}

LieElt LieElt::component(int deg) const {
  LieElt out;
  for (const auto& [w, c] : t_)
    if (static_cast<int>(w.size()) == deg) out.t_[w] = c;
  return out;
}

LieElt LieElt::truncated(int N) const {
  LieElt out;
  for (const auto& [w, c] : t_)
    if (static_cast<int>(w.size()) <= N) out.t_[w] = c;
  return out;
}

bool LieElt::is_integral() const {
  for (const auto& [w, c] : t_)
    if (c.get_den() != 1) return false;
  return true;
}

LieElt LieElt::operator+(const LieElt& o) const {
  LieElt out = *this;
  for (const auto& [w, c] : o.t_) {
    auto& x = out.t_[w];
    x += c;
    if (x == 0) out.t_.erase(w);
  }
  return out;
}

LieElt LieElt::operator-(const LieElt& o) const { return *this + (-o); }

LieElt LieElt::operator-() const {
  LieElt out;
  for (const auto& [w, c] : t_) out.t_[w] = -c;
  return out;
}

LieElt LieElt::operator*(const Rat& c) const {
  LieElt out;
  if (c == 0) return out;
  for (const auto& [w, k] : t_) out.t_[w] = k * c;
  return out;
}

TMap tensor_of(const LieElt& u) {
  TMap out;
  for (const auto& [w, c] : u.terms()) out = tmap_add(std::move(out), lyndon_tensor(w), c);
  return out;
}

LieElt lie_from_tensor(const TMap& t) {
  TMap rest = t;
  LieElt out;
  while (!rest.empty()) {
    auto it = rest.begin();
    const TWord w = it->first;
    const Rat c = it->second;
    if (!is_lyndon(w)) throw WordError("tensor element is not in the Lie subalgebra");
    out.add_term(w, c);
    rest = tmap_add(std::move(rest), lyndon_tensor(w), -c);
  }
  return out;
}

LieElt lie_bracket(const LieElt& u, const LieElt& v) {
  TMap a = tensor_of(u), b = tensor_of(v);
  return lie_from_tensor(tmap_add(concat(a, b), concat(b, a), Rat(-1)));
}

LieElt act_F(const Word& f, const LieElt& u) {
  if (f.is_identity()) return u;
  for (const auto& s : f.syllables())
    if (s.kind != GenKind::X) throw WordError("act_F expects a word over the x's");
  TMap acc;
  for (const auto& [w, c] : u.terms()) acc = tmap_add(std::move(acc), bracket_tensor(w, f), c);
  return lie_from_tensor(acc);
}

LieElt zeta_class(int genus) {
  LieElt z;
  for (int i = 1; i <= genus; ++i) {
    z = z + LieElt::gen(i) - LieElt::letter(Word::gen(GenKind::X, i, -1), i);
  }
  return z;
}

std::vector<std::pair<Word, LieElt>> coinvariant_decompose(const LieElt& u,
                                                           const std::string& code) {
  // Tensor monomials with a trivial first bead are a genuine module basis of
  // the tensor algebra over the group ring (translates never mix monomials),
  // so grouping by orbit representative decides the coinvariant class exactly.
  std::map<TWord, std::map<Word, Rat>, TWordLess> lam;
  for (const auto& [w, c] : tensor_of(u)) {
    const Word h = w.front().f;
    TWord rep = w;
    if (!h.is_identity()) {
      Word hi = h.inverse();
      for (auto& l : rep) l.f = hi * l.f;
    }
    auto& x = lam[rep][h];
    x += c;
    if (x == 0) lam[rep].erase(h);
  }
  LieElt cls;
  std::map<Word, LieElt> acc;
  for (const auto& [rep, l] : lam) {
    const int n = static_cast<int>(rep.size());
    // right-normed Dynkin map, n * id on the degree-n Lie part; it lands the
    // per-orbit pieces back in the Lie algebra (chained in tensor form, one
    // conversion at the end)
    TMap dt = {{TWord{rep.back()}, Rat(1)}};
    for (std::size_t k = rep.size() - 1; k-- > 0;) {
      TMap lt = {{TWord{rep[k]}, Rat(1)}};
      dt = tmap_add(concat(lt, dt), concat(dt, lt), Rat(-1));
    }
    LieElt d = lie_from_tensor(dt);
    Rat aug(0);
    for (const auto& [f, c] : l) aug += c;
    if (aug != 0) cls = cls + d * (aug / n);
    for (const auto& [f, c] : l)
      if (!f.is_identity()) acc[f] = acc[f] + d * (c / n);
  }
  if (!cls.is_zero()) throw CodedError(code, "nonzero coinvariant class " + cls.str());
  std::vector<std::pair<Word, LieElt>> out;
  for (auto& [f, w] : acc)
    if (!w.is_zero()) out.emplace_back(f, std::move(w));
  return out;
}

CoinvResult coinvariant_reduce(const LieElt& u) {
  CoinvResult out;
  std::map<Word, LieElt> parts;
  for (const auto& [w, c] : u.terms()) {
    const Word& f = w.front().f;  // first letter of a Lyndon word is minimal
    LieElt term;
    term.add_term(w, c);
    if (f.is_identity()) {
      out.representative = out.representative + term;
    } else {
      LieElt moved = act_F(f.inverse(), term);
      out.representative = out.representative + moved;
      parts[f] = parts[f] + moved;
    }
  }
  for (auto& [f, w] : parts)
    if (!w.is_zero()) out.parts.emplace_back(f, std::move(w));
  return out;
}

namespace {
// echelon basis over Q of tensor-coordinate rows, with membership test
struct RowSpace {
  std::map<TWord, TMap, TWordLess> rows;  // pivot -> reduced row

  TMap reduce(TMap v) const {
    for (const auto& [p, row] : rows) {
      auto it = v.find(p);
      if (it == v.end()) continue;
      v = tmap_add(std::move(v), row, -it->second);
    }
    return v;
  }

  bool insert(TMap v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const TWord pivot = v.begin()->first;
    Rat lead = v.begin()->second;
    TMap norm;
    for (const auto& [w, c] : v) norm[w] = c / lead;
    for (auto& [p, row] : rows) {
      auto it = row.find(pivot);
      if (it != row.end()) row = tmap_add(std::move(row), norm, -it->second);
    }
    rows[pivot] = std::move(norm);
    return true;
  }
};
}  // namespace

std::vector<LieElt> module_basis(int genus, int m, const std::vector<Word>& support) {
  if (genus < 1 || m < 1) throw WordError("module_basis needs genus, degree >= 1");
  std::vector<Word> supp = support;
  if (std::find(supp.begin(), supp.end(), Word()) == supp.end()) supp.insert(supp.begin(), Word());
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());

  std::vector<Letter> alphabet;
  for (int i = 1; i <= genus; ++i)
    for (const auto& f : supp) alphabet.push_back({f, i});
  std::sort(alphabet.begin(), alphabet.end());

  // all Lyndon candidates of degree m whose first letter has trivial F-part
  std::vector<TWord> candidates;
  TWord cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      if (is_lyndon(cur) && cur.front().f.is_identity()) candidates.push_back(cur);
      return;
    }
    for (const auto& l : alphabet) {
      cur.push_back(l);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(candidates.begin(), candidates.end(), TWordLess{});

  RowSpace space;
  std::vector<LieElt> basis;
  for (const auto& w : candidates) {
    LieElt u;
    u.add_term(w, Rat(1));
    if (!space.reduce(tensor_of(u)).empty()) {
      basis.push_back(u);
      // add all translates staying inside the support alphabet
      for (const auto& s : supp) {
        bool ok = true;
        for (const auto& l : w)
          if (std::find(supp.begin(), supp.end(), s * l.f) == supp.end()) ok = false;
        if (ok) space.insert(tensor_of(act_F(s, u)));
      }
      space.insert(tensor_of(u));
    }
  }
  return basis;
}

std::vector<std::pair<Letter, LieElt>> letter_bracket_decompose(const LieElt& u) {
  if (!u.is_zero() && u.min_degree() < 2)
    throw WordError("letter_bracket_decompose needs degree >= 2");
  std::map<Letter, LieElt> acc;
  for (int n = u.min_degree(); n <= u.max_degree(); ++n) {
    LieElt part = u.component(n);
    if (part.is_zero()) continue;
    for (const auto& [w, c] : tensor_of(part)) {
      // right-normed Dynkin map: w1...wn -> [w1,[w2,[...,wn]]], equals n*id on Lie_n
      LieElt t = LieElt::letter(w.back().f, w.back().idx);
      for (std::size_t k = w.size() - 1; k-- > 1;)
        t = lie_bracket(LieElt::letter(w[k].f, w[k].idx), t);
      acc[w.front()] = acc[w.front()] + t * (c / n);
    }
  }
  std::vector<std::pair<Letter, LieElt>> out;
  for (auto& [l, t] : acc)
    if (!t.is_zero()) out.emplace_back(l, std::move(t));
  return out;
}

std::string letter_str(const Letter& l) {
  std::string f = l.f.str();
  return "(" + (f.empty() ? "" : f + " ") + ". a" + std::to_string(l.idx) + ")";
}

namespace {
std::string key_str(const TWord& w) {
  if (w.size() == 1) return letter_str(w[0]);
  std::size_t k = std_split(w);
  return "[" + key_str(TWord(w.begin(), w.begin() + k)) + ", " + key_str(suffix_of(w, k)) + "]";
}

std::string rat_str(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

struct Parser {
  const std::string& s;
  std::size_t p = 0;
  explicit Parser(const std::string& text) : s(text) {}

  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw WordError(std::string("expected '") + c + "' in Lie element");
  }

  LieElt expr() {
    ws();
    if (p >= s.size()) throw WordError("unexpected end of Lie element");
    if (s[p] == '[') {
      ++p;
      LieElt a = expr();
      expect(',');
      LieElt b = expr();
      expect(']');
      return lie_bracket(a, b);
    }
    if (s[p] == '(') {
      std::size_t close = s.find(')', p);
      if (close == std::string::npos) throw WordError("unbalanced '(' in Lie element");
      std::string inner = s.substr(p + 1, close - p - 1);
      p = close + 1;
      std::size_t dot = inner.find('.');
      if (dot == std::string::npos) throw WordError("letter must look like (f . a<i>)");
      Word f = Word::parse(inner.substr(0, dot));
      std::string rest = inner.substr(dot + 1);
      std::size_t a = rest.find('a');
      if (a == std::string::npos) throw WordError("letter must name a generator a<i>");
      int idx = std::stoi(rest.substr(a + 1));
      return LieElt::letter(f, idx);
    }
    throw WordError("expected '[' or '(' in Lie element");
  }

  Rat number() {
    ws();
    std::size_t start = p;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
    if (p == start) return Rat(1);
    Rat r(s.substr(start, p - start));
    r.canonicalize();
    return r;
  }
};
}  // namespace

std::string LieElt::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << rat_str(a) << '*' << key_str(w);
  }
  return os.str();
}

LieElt LieElt::parse(const std::string& text) {
  Parser ps(text);
  LieElt out;
  ps.ws();
  if (ps.p >= text.size()) return out;
  if (text.substr(ps.p) == "0") return out;
  bool neg = false;
  if (ps.eat('-')) neg = true;
  else ps.eat('+');
  while (true) {
    ps.ws();
    Rat c(1);
    if (ps.p < text.size() &&
        (std::isdigit(static_cast<unsigned char>(text[ps.p])))) {
      c = ps.number();
      if (!ps.eat('*')) throw WordError("expected '*' after coefficient");
    }
    LieElt e = ps.expr();
    out = out + e * (neg ? -c : c);
    ps.ws();
    if (ps.p >= text.size()) break;
    if (ps.eat('+')) neg = false;
    else if (ps.eat('-')) neg = true;
    else throw WordError("expected '+' or '-' between Lie terms");
  }
  return out;
}

}  // namespace hg

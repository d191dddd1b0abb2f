#include "hg/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

EnvElt EnvElt::unit(const Rat& c, int N) {
  EnvElt e(N);
  e.add_term({}, Word(), c);
  return e;
}

EnvElt EnvElt::group(const Word& f, int N) {
  EnvElt e(N);
  e.add_term({}, f, Rat(1));
  return e;
}

EnvElt EnvElt::from_lie(const LieElt& u, int N) {
  EnvElt e(N);
  for (const auto& [w, c] : tensor_of(u)) e.add_term(w, Word(), c);
  return e;
}

void EnvElt::add_term(const TWord& v, const Word& f, const Rat& c) {
  if (c == 0 || static_cast<int>(v.size()) > N_) return;
  EnvKey k{v, f};
  auto& x = t_[k];
  x += c;
  if (x == 0) t_.erase(k);
}

Rat EnvElt::coeff(const TWord& v, const Word& f) const {
  auto it = t_.find(EnvKey{v, f});
  return it == t_.end() ? Rat(0) : it->second;
}

bool EnvElt::f_trivial() const {
  for (const auto& [k, c] : t_)
    if (!k.f.is_identity()) return false;
  return true;
}

EnvElt EnvElt::operator+(const EnvElt& o) const {
  if (N_ != o.N_) throw WordError("truncation mismatch");
  EnvElt e = *this;
  for (const auto& [k, c] : o.t_) e.add_term(k.v, k.f, c);
  return e;
}

EnvElt EnvElt::operator-(const EnvElt& o) const { return *this + (-o); }

EnvElt EnvElt::operator-() const {
  EnvElt e(N_);
  for (const auto& [k, c] : t_) e.t_[k] = -c;
  return e;
}

EnvElt EnvElt::operator*(const Rat& c) const {
  EnvElt e(N_);
  if (c == 0) return e;
  for (const auto& [k, x] : t_) e.t_[k] = x * c;
  return e;
}

EnvElt env_mul(const EnvElt& u, const EnvElt& v) {
  if (u.truncation() != v.truncation()) throw WordError("truncation mismatch");
  EnvElt out(u.truncation());
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      if (static_cast<int>(ku.v.size() + kv.v.size()) > out.truncation()) continue;
      TWord w = ku.v;
      for (const auto& l : kv.v) w.push_back({ku.f * l.f, l.idx});
      out.add_term(w, ku.f * kv.f, cu * cv);
    }
  }
  return out;
}

EnvElt EnvElt::operator*(const EnvElt& o) const { return env_mul(*this, o); }

EnvElt env_exp(const LieElt& u, int N) {
  if (!u.is_zero() && u.min_degree() < 1) throw WordError("exp input must have degree >= 1");
  EnvElt x = EnvElt::from_lie(u, N);
  EnvElt out = EnvElt::one(N);
  EnvElt pow = EnvElt::one(N);
  Rat fact(1);
  for (int k = 1; k <= N; ++k) {
    pow = pow * x;
    fact *= k;
    out = out + pow * (Rat(1) / fact);
  }
  return out;
}

LieElt env_log(const EnvElt& v) {
  if (!v.f_trivial()) throw WordError("log input must have trivial group part");
  if (v.constant() != 1) throw WordError("log input must be 1 + (higher)");
  int N = v.truncation();
  EnvElt x = v - EnvElt::one(N);
  EnvElt out(N);
  EnvElt pow = EnvElt::one(N);
  for (int k = 1; k <= N; ++k) {
    pow = pow * x;
    out = out + pow * (Rat((k % 2) ? 1 : -1) / Rat(k));
  }
  TMap t;
  for (const auto& [k, c] : out.terms()) t[k.v] = c;
  return lie_from_tensor(t);
}

EnvElt env_inv(const EnvElt& v) {
  if (v.is_zero()) throw WordError("cannot invert zero");
  const Word f0 = v.terms().begin()->first.f;
  for (const auto& [k, c] : v.terms())
    if (!(k.f == f0)) throw WordError("env_inv needs a single group part");
  Rat c0 = v.coeff({}, f0);
  if (c0 == 0) throw WordError("env_inv needs an invertible constant term");
  int N = v.truncation();
  // strip the group part, invert the tensor part by a geometric series
  EnvElt t(N);
  for (const auto& [k, c] : v.terms()) t.add_term(k.v, Word(), c / c0);
  EnvElt s = t - EnvElt::one(N);
  EnvElt ti = EnvElt::one(N);
  EnvElt pow = EnvElt::one(N);
  for (int k = 1; k <= N; ++k) {
    pow = pow * s;
    ti = ti + pow * Rat((k % 2) ? -1 : 1);
  }
  return EnvElt::group(f0.inverse(), N) * ti * (Rat(1) / c0);
}

std::string EnvElt::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << a << '*';
    if (k.v.empty()) {
      os << '1';
    } else {
      for (const auto& l : k.v) os << letter_str(l);
    }
    if (!k.f.is_identity()) os << " | " << k.f.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// expansions

Expansion theta_standard(int genus, int N) {
  Expansion th;
  th.genus = genus;
  th.N = N;
  for (int i = 1; i <= genus; ++i) th.ell_alpha.push_back(LieElt::gen(i));
  th.m_beta.assign(genus, LieElt());
  return th;
}

EnvElt theta_eval(const Expansion& th, const Word& w) {
  const int N = th.N;
  EnvElt out = EnvElt::one(N);
  for (const auto& l : w.letters()) {
    EnvElt img(N);
    if (l.kind == GenKind::A) {
      const LieElt& u = th.ell_alpha.at(l.idx - 1);
      img = env_exp(l.exp > 0 ? u : -u, N);
    } else if (l.kind == GenKind::B) {
      const LieElt& m = th.m_beta.at(l.idx - 1);
      Word x = Word::gen(GenKind::X, l.idx);
      if (l.exp > 0) {
        img = env_exp(m, N) * EnvElt::group(x, N);
      } else {
        img = EnvElt::group(x.inverse(), N) * env_exp(-m, N);
      }
    } else {
      throw WordError("theta_eval expects a word over pi");
    }
    out = out * img;
  }
  return out;
}

LieElt ell(const Expansion& th, const Word& w) {
  if (!in_A(w)) throw WordError("ell is defined on elements of A");
  return env_log(theta_eval(th, w));
}

bool validate_expansion(const Expansion& th) {
  if (th.genus < 1 || th.N < 1) return false;
  if (th.ell_alpha.size() != static_cast<std::size_t>(th.genus)) return false;
  if (th.m_beta.size() != static_cast<std::size_t>(th.genus)) return false;
  for (int i = 1; i <= th.genus; ++i) {
    const LieElt& u = th.ell_alpha[i - 1];
    if (u.min_degree() != 1 || !(u.component(1) == LieElt::gen(i))) return false;
    if (u.max_degree() > th.N) return false;
    const LieElt& m = th.m_beta[i - 1];
    if (!m.is_zero() && (m.min_degree() < 1 || m.max_degree() > th.N)) return false;
  }
  return true;
}

bool is_special(const Expansion& th) {
  if (!validate_expansion(th)) return false;
  return ell(th, zeta(th.genus)) == zeta_class(th.genus);
}

std::string Expansion::str() const {
  std::ostringstream os;
  os << "genus " << genus << "\n";
  os << "truncation " << N << "\n";
  for (int i = 1; i <= genus; ++i)
    os << "ell a" << i << " = " << ell_alpha[i - 1].str() << "\n";
  for (int j = 1; j <= genus; ++j)
    os << "log b" << j << " = " << m_beta[j - 1].str() << "\n";
  return os.str();
}

Expansion Expansion::parse(const std::string& text) {
  Expansion th;
  th.genus = 0;
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<int, LieElt>> alphas, betas;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "genus") {
      ls >> th.genus;
    } else if (head == "truncation") {
      ls >> th.N;
    } else if (head == "ell" || head == "log") {
      std::string gen, eq;
      ls >> gen >> eq;
      if (eq != "=") throw WordError("expansion line needs '='");
      std::string rest;
      std::getline(ls, rest);
      int idx = std::stoi(gen.substr(1));
      if (head == "ell") {
        alphas.emplace_back(idx, LieElt::parse(rest));
      } else {
        betas.emplace_back(idx, LieElt::parse(rest));
      }
    } else {
      throw WordError("unknown expansion line: " + line);
    }
  }
  th.ell_alpha.assign(th.genus, LieElt());
  th.m_beta.assign(th.genus, LieElt());
  for (auto& [i, u] : alphas) th.ell_alpha.at(i - 1) = u;
  for (auto& [j, u] : betas) th.m_beta.at(j - 1) = u;
  if (!validate_expansion(th)) throw WordError("invalid expansion document");
  return th;
}

// ---------------------------------------------------------------------------
// special expansions

namespace {
std::vector<TWord> lyndon_words(int degree, int nletters) {
  std::vector<TWord> out;
  TWord cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == degree) {
      if (is_lyndon(cur)) out.push_back(cur);
      return;
    }
    for (int k = 1; k <= nletters; ++k) {
      cur.push_back(Letter{Word(), k});
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), TWordLess{});
  return out;
}

// Solve sum_k [w_k, d_k] = rhs for degree-n elements w_k; Gauss-Jordan with
// first-in-order pivots and zero free variables.
std::vector<LieElt> solve_conjugators(const LieElt& rhs, int n, int nletters) {
  std::vector<TWord> basis = lyndon_words(n, nletters);
  std::vector<LieElt> cols_lie;
  for (int k = 1; k <= nletters; ++k) {
    LieElt dk = LieElt::gen(k);
    for (const auto& b : basis) {
      LieElt wb;
      wb.add_term(b, Rat(1));
      cols_lie.push_back(lie_bracket(wb, dk));
    }
  }
  // collect row keys
  std::vector<TWord> keys;
  {
    std::map<TWord, int, TWordLess> seen;
    auto note = [&](const LieElt& u) {
      for (const auto& [w, c] : u.terms()) seen.emplace(w, 0);
    };
    for (const auto& u : cols_lie) note(u);
    note(rhs);
    for (const auto& [w, z] : seen) keys.push_back(w);
  }
  const int R = static_cast<int>(keys.size());
  const int C = static_cast<int>(cols_lie.size());
  std::vector<std::vector<Rat>> m(R, std::vector<Rat>(C + 1));
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < C; ++c) m[r][c] = cols_lie[c].coeff(keys[r]);
    m[r][C] = rhs.coeff(keys[r]);
  }
  std::vector<int> pivot_of_col(C, -1);
  int row = 0;
  for (int c = 0; c < C && row < R; ++c) {
    int pr = -1;
    for (int r = row; r < R; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Rat lead = m[row][c];
    for (int j = c; j <= C; ++j) m[row][j] /= lead;
    for (int r = 0; r < R; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j <= C; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_of_col[c] = row;
    ++row;
  }
  for (int r = row; r < R; ++r)
    if (m[r][C] != 0) throw CodedError("SOLVER_FAILURE", "inconsistent conjugator system");
  std::vector<LieElt> w(nletters);
  const int per = static_cast<int>(basis.size());
  for (int c = 0; c < C; ++c) {
    if (pivot_of_col[c] < 0) continue;  // free variable, set to zero
    Rat x = m[pivot_of_col[c]][C];
    if (x == 0) continue;
    LieElt wb;
    wb.add_term(basis[c % per], x);
    w[c / per] = w[c / per] + wb;
  }
  return w;
}

// letter substitution d_{2i} -> a_i, d_{2i-1} -> -x_i^{-1} a_i
LieElt q_map(const LieElt& u) {
  TMap out;
  for (const auto& [w, c] : tensor_of(u)) {
    TWord img;
    Rat coeff = c;
    for (const auto& l : w) {
      if (!l.f.is_identity()) throw WordError("q_map expects letters without beads");
      int i = (l.idx + 1) / 2;
      if (l.idx % 2 == 0) {
        img.push_back(Letter{Word(), i});
      } else {
        img.push_back(Letter{Word::gen(GenKind::X, i, -1), i});
        coeff = -coeff;
      }
    }
    auto& x = out[img];
    x += coeff;
    if (x == 0) out.erase(img);
  }
  return lie_from_tensor(out);
}
}  // namespace

Expansion special_construct(int genus, int N, std::vector<LieElt>* conjugators) {
  if (genus < 1 || N < 1) throw WordError("special_construct needs genus, N >= 1");
  const int n = 2 * genus;
  std::vector<LieElt> d, v(n);
  for (int k = 1; k <= n; ++k) d.push_back(LieElt::gen(k));
  LieElt target;
  for (int k = 0; k < n; ++k) {
    target = target + d[k];
    for (int j = 0; j < k; ++j) v[k] = v[k] + d[j] * Rat(1, 2);
  }
  auto boundary_log = [&]() {
    EnvElt p = EnvElt::one(N);
    for (int k = n - 1; k >= 0; --k)
      p = p * env_exp(v[k], N) * env_exp(d[k], N) * env_exp(-v[k], N);
    return env_log(p);
  };
  for (int deg = 2; deg < N; ++deg) {
    LieElt err = (boundary_log() - target).component(deg + 1);
    if (err.is_zero()) continue;
    std::vector<LieElt> w = solve_conjugators(-err, deg, n);
    for (int k = 0; k < n; ++k) v[k] = v[k] + w[k];
  }
  if (!(boundary_log() == target))
    throw CodedError("SOLVER_FAILURE", "construction did not converge");
  if (conjugators) *conjugators = v;

  Expansion th;
  th.genus = genus;
  th.N = N;
  for (int i = 1; i <= genus; ++i) {
    EnvElt ai = env_exp(v[2 * i - 1], N) * env_exp(d[2 * i - 1], N) * env_exp(-v[2 * i - 1], N);
    th.ell_alpha.push_back(q_map(env_log(ai)));
    // theta(beta_i) = exp(q(u_i)) exp(^{x_i} q(-u'_i)) (x) x_i
    LieElt qu = q_map(v[2 * i - 1]);
    LieElt qup = q_map(v[2 * i - 2]);
    EnvElt tb = env_exp(qu, N) * env_exp(act_F(Word::gen(GenKind::X, i), -qup), N);
    th.m_beta.push_back(env_log(tb));
  }
  if (!is_special(th)) throw CodedError("SOLVER_FAILURE", "output is not special");
  return th;
}

LieElt class_of(const Word& w, int genus, int m, int N) {
  if (m < 1) throw WordError("class_of needs degree >= 1");
  if (N < m) N = m;
  Expansion th = theta_standard(genus, N);
  LieElt L = ell(th, w);
  for (int dd = 1; dd < m; ++dd)
    if (!L.component(dd).is_zero())
      throw CodedError("W_NOT_IN_GAMMA_M",
                       "word is not in the degree-" + std::to_string(m) + " term");
  LieElt out = L.component(m);
  if (!out.is_integral()) throw WordError("internal: graded class is not integral");
  return out;
}

}  // namespace hg

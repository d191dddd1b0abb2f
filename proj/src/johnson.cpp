#include "hg/johnson.hpp"

#include <algorithm>
#include <string>

namespace hg {

namespace {
Word A(int i, long e = 1) { return Word::gen(GenKind::A, i, e); }
Word B(int i, long e = 1) { return Word::gen(GenKind::B, i, e); }
Word X(int i, long e = 1) { return Word::gen(GenKind::X, i, e); }

void check_homogeneous(const LieElt& u, int deg, const char* what) {
  if (u.is_zero()) return;
  if (u.min_degree() != deg || u.max_degree() != deg)
    throw WordError(std::string(what) + " value is not homogeneous of the expected degree");
}

void require_pair_automorphism(const Endo& f) {
  PairCheck r = verify_pair_automorphism(f);
  if (r != PairCheck::OK)
    throw WordError("not an automorphism of the pair: " + to_string(r));
}

bool f_action_trivial(const Endo& f) {
  for (int j = 1; j <= f.genus(); ++j)
    if (varpi(f.image_b(j)) != X(j)) return false;
  return true;
}
}  // namespace

std::vector<LieElt> d0_to_d1(const std::vector<LieElt>& c, int genus, int degree) {
  // lift of the cocycle as a sum of letter (x) Lie terms
  std::vector<std::pair<Letter, LieElt>> lift;
  LieElt br;
  for (int i = 0; i < genus; ++i) {
    Letter u{Word(), i + 1};
    lift.emplace_back(u, -c[i]);
    br = br + lie_bracket(LieElt::gen(i + 1), -c[i]);
  }
  auto parts = coinvariant_decompose(br, "NOT_IN_D0");
  // correct the lift so its total bracket vanishes exactly
  for (const auto& [fj, wj] : parts) {
    for (const auto& [s, t] : letter_bracket_decompose(wj)) {
      lift.emplace_back(Letter{fj * s.f, s.idx}, -act_F(fj, t));
      lift.emplace_back(s, t);
    }
  }
  std::map<Letter, LieElt> merged;  // the same translated letter recurs
  for (const auto& [u, v] : lift) merged[u] = merged[u] + v;
  LieElt total;
  for (const auto& [u, v] : merged) total = total + lie_bracket(LieElt::letter(u.f, u.idx), v);
  if (!total.is_zero()) throw WordError("internal: lift correction failed");

  std::vector<LieElt> h(genus);
  for (int i = 0; i < genus; ++i) {
    LieElt hi;
    for (const auto& [u, v] : merged) {
      if (v.is_zero()) continue;
      TensorA p = psi(LieElt::letter(u.f, u.idx), LieElt::gen(i + 1));
      for (const auto& [k, cc] : p.terms())
        hi = hi - lie_bracket(act_F(k.first.inverse(), v),
                              LieElt::letter(k.second.f, k.second.idx)) *
                      cc;
    }
    h[i] = hi;
  }
  (void)degree;
  return h;
}

SpecialDerivation make_sder(int genus, int degree, std::vector<LieElt> c,
                            std::vector<LieElt> h) {
  if ((int)c.size() != genus || (int)h.size() != genus)
    throw WordError("derivation data size does not match the genus");
  for (const auto& u : c) check_homogeneous(u, degree, "cocycle");
  for (const auto& u : h) check_homogeneous(u, degree + 1, "module");
  std::vector<LieElt> want = d0_to_d1(c, genus, degree);
  for (int i = 0; i < genus; ++i)
    if (!(want[i] == h[i]))
      throw WordError("derivation data is inconsistent at a" + std::to_string(i + 1));
  SpecialDerivation d{genus, degree, std::move(c), std::move(h)};
  if (!sder_apply(d, zeta_class(genus)).is_zero())
    throw WordError("derivation does not kill the boundary class");
  return d;
}

LieElt cocycle_eval(const SpecialDerivation& d, const Word& f) {
  LieElt out;
  Word prefix;
  for (const auto& s : f.letters()) {
    if (s.kind != GenKind::X) throw WordError("expected a word over the x's");
    LieElt val = s.exp > 0 ? d.c[s.idx - 1] : -act_F(X(s.idx, -1), d.c[s.idx - 1]);
    out = out + act_F(prefix, val);
    prefix = prefix * Word::gen(s.kind, s.idx, s.exp);
  }
  return out;
}

LieElt sder_apply(const SpecialDerivation& d, const LieElt& u) {
  TMap t = tensor_of(u);
  TMap out;
  std::map<Letter, TMap> memo;  // the same letter recurs across monomials
  for (const auto& [w, c] : t) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      const Letter& l = w[p];
      auto it = memo.find(l);
      if (it == memo.end()) {
        LieElt dl = act_F(l.f, d.h[l.idx - 1]);
        if (!l.f.is_identity())
          dl = dl + lie_bracket(cocycle_eval(d, l.f), LieElt::letter(l.f, l.idx));
        it = memo.emplace(l, tensor_of(dl)).first;
      }
      for (const auto& [v, cv] : it->second) {
        TWord nw(w.begin(), w.begin() + p);
        nw.insert(nw.end(), v.begin(), v.end());
        nw.insert(nw.end(), w.begin() + p + 1, w.end());
        Rat& x = out[nw];
        x += c * cv;
        if (x == 0) out.erase(nw);
      }
    }
  }
  return lie_from_tensor(out);
}

SpecialDerivation sder_bracket(const SpecialDerivation& d, const SpecialDerivation& e) {
  if (d.genus != e.genus) throw WordError("genus mismatch");
  int g = d.genus;
  std::vector<LieElt> c(g), h(g);
  for (int j = 0; j < g; ++j)
    c[j] = sder_apply(d, e.c[j]) - sder_apply(e, d.c[j]) - lie_bracket(d.c[j], e.c[j]);
  for (int i = 0; i < g; ++i) h[i] = sder_apply(d, e.h[i]) - sder_apply(e, d.h[i]);
  return make_sder(g, d.degree + e.degree, std::move(c), std::move(h));
}

namespace {
// lowest classes of f(gen) gen^{-1}, with membership checks below degree k
LieElt graded_value(const Endo& f, const Expansion& th, const Word& gen, const Word& img,
                    int k, const char* name, int witness) {
  Word w = img * gen.inverse();
  if (!in_A(w))
    throw CodedError("F_NOT_IN_H_K", std::string("image of ") + name +
                                         std::to_string(witness) + " moves the free quotient");
  LieElt L = ell(th, w);
  for (int m = 1; m < k; ++m)
    if (!L.component(m).is_zero())
      throw CodedError("F_NOT_IN_H_K", std::string("nonzero class of ") + name +
                                           std::to_string(witness) + " in degree " +
                                           std::to_string(m));
  return L.component(k);
}
}  // namespace

std::vector<LieElt> tau0(const Endo& f, int k, const Expansion& th) {
  require_pair_automorphism(f);
  if (k < 1 || k > th.N) throw WordError("depth must lie in 1..N");
  std::vector<LieElt> c(f.genus());
  for (int j = 1; j <= f.genus(); ++j)
    c[j - 1] = graded_value(f, th, B(j), f.image_b(j), k, "b", j);
  return c;
}

std::vector<LieElt> tau1(const Endo& f, int k, const Expansion& th) {
  require_pair_automorphism(f);
  if (k < 1 || k + 1 > th.N) throw WordError("depth must lie in 1..N-1");
  std::vector<LieElt> h(f.genus());
  for (int i = 1; i <= f.genus(); ++i)
    h[i - 1] = graded_value(f, th, A(i), f.image_a(i), k + 1, "a", i);
  return h;
}

SpecialDerivation tau(const Endo& f, int k, const Expansion& th) {
  return make_sder(f.genus(), k, tau0(f, k, th), tau1(f, k, th));
}

int jf_degree(const Endo& f, int N) {
  PairCheck r = verify_G_membership(f);
  if (r != PairCheck::OK)
    throw WordError("not an automorphism of the pair: " + to_string(r));
  if (!f_action_trivial(f)) return 0;
  require_pair_automorphism(f);
  int g = f.genus();
  Expansion thb = theta_standard(g, N);
  Expansion tha = theta_standard(g, N + 1);
  int kb = N + 1, ka = N + 1;
  for (int j = 1; j <= g; ++j) {
    LieElt L = ell(thb, f.image_b(j) * B(j).inverse());
    if (!L.is_zero()) kb = std::min(kb, L.min_degree());
  }
  for (int i = 1; i <= g; ++i) {
    LieElt L = ell(tha, f.image_a(i) * A(i).inverse());
    if (!L.is_zero()) ka = std::min(ka, L.min_degree() - 1);
  }
  ka = std::min(ka, N + 1);
  // the beta side determines the filtration; the alpha side can only confirm
  // (an automorphism may fix every alpha without being deep on the beta side)
  if (ka < kb) throw WordError("internal: the two filtration scans disagree");
  return kb;
}

namespace {
struct RhoImages {
  std::vector<EnvElt> a;  // rho(a_i (x) 1)
  std::vector<EnvElt> x;  // rho(1 (x) x_j)
  // beads and F-parts repeat heavily across terms; caches are per rho version
  mutable std::map<Word, EnvElt> fword_cache;
  mutable std::map<Letter, EnvElt> letter_cache;
};

const EnvElt& rho_of_fword(const RhoImages& r, const Word& f, int N) {
  auto it = r.fword_cache.find(f);
  if (it != r.fword_cache.end()) return it->second;
  EnvElt out = EnvElt::one(N);
  if (!f.is_identity()) {
    const auto& syl = f.syllables();
    // peel one letter so prefixes hit the cache too
    Syl last = syl.back();
    long step = last.exp > 0 ? 1 : -1;
    Word head = f * Word::gen(GenKind::X, last.idx, -step);
    const EnvElt& img = r.x[last.idx - 1];
    out = env_mul(rho_of_fword(r, head, N), step > 0 ? img : env_inv(img));
  }
  return r.fword_cache.emplace(f, std::move(out)).first->second;
}

EnvElt apply_rho(const RhoImages& r, const EnvElt& e) {
  int N = e.truncation();
  EnvElt out(N);
  for (const auto& [key, c] : e.terms()) {
    EnvElt acc = EnvElt::unit(c, N);
    for (const auto& l : key.v) {
      auto it = r.letter_cache.find(l);
      if (it == r.letter_cache.end()) {
        EnvElt img = r.a[l.idx - 1];
        if (!l.f.is_identity()) {
          const EnvElt& cj = rho_of_fword(r, l.f, N);
          img = env_mul(env_mul(cj, img), env_inv(cj));
        }
        it = r.letter_cache.emplace(l, std::move(img)).first;
      }
      acc = env_mul(acc, it->second);
    }
    out = out + env_mul(acc, rho_of_fword(r, key.f, N));
  }
  return out;
}

// tensor part of an envelope element with trivial F-words, as a Lie element
LieElt lie_part(const EnvElt& e) {
  TMap t;
  for (const auto& [key, c] : e.terms()) {
    if (!key.f.is_identity())
      throw WordError("internal: expected a trivial free-group part");
    if (!key.v.empty()) t[key.v] = c;
  }
  return lie_from_tensor(t);
}
}  // namespace

std::vector<SpecialDerivation> varrho(const Endo& f, const Expansion& th) {
  require_pair_automorphism(f);
  if (!f_action_trivial(f)) throw WordError("expected an element of the twist group");
  if (!is_special(th)) throw WordError("expected a special expansion");
  int g = th.genus, N = th.N;
  if (f.genus() != g) throw WordError("genus mismatch");

  std::vector<EnvElt> target_a, target_b;
  std::vector<LieElt> rest;
  for (int i = 1; i <= g; ++i) {
    target_a.push_back(EnvElt::from_lie(ell(th, f.image_a(i)), N));
    target_b.push_back(theta_eval(th, f.image_b(i)));
    rest.push_back(th.ell_alpha[i - 1] - LieElt::gen(i));
  }

  RhoImages rho;
  for (int i = 1; i <= g; ++i) {
    rho.a.push_back(EnvElt::from_lie(LieElt::gen(i), N));
    rho.x.push_back(EnvElt::group(X(i), N));
  }
  for (int round = 0; round <= N; ++round) {
    RhoImages next;
    for (int i = 0; i < g; ++i)
      next.a.push_back(target_a[i] - apply_rho(rho, EnvElt::from_lie(rest[i], N)));
    for (int j = 0; j < g; ++j)
      next.x.push_back(
          env_mul(env_inv(apply_rho(rho, env_exp(th.m_beta[j], N))), target_b[j]));
    rho = std::move(next);
  }
  for (int i = 1; i <= g; ++i) {
    if (!(apply_rho(rho, theta_eval(th, A(i))) == theta_eval(th, f.image_a(i))) ||
        !(apply_rho(rho, theta_eval(th, B(i))) == theta_eval(th, f.image_b(i))))
      throw WordError("internal: envelope automorphism did not converge");
  }

  auto op_log = [&](const EnvElt& e) {
    EnvElt out(N), delta = apply_rho(rho, e) - e;
    Rat sign(1);
    for (int n = 1; n <= N && !delta.is_zero(); ++n) {
      out = out + delta * (sign / n);
      sign = -sign;
      delta = apply_rho(rho, delta) - delta;
    }
    return out;
  };

  std::vector<LieElt> cfull(g), hfull(g);
  for (int j = 1; j <= g; ++j)
    cfull[j - 1] = lie_part(env_mul(op_log(EnvElt::group(X(j), N)), EnvElt::group(X(j, -1), N)));
  for (int i = 1; i <= g; ++i)
    hfull[i - 1] = lie_part(op_log(EnvElt::from_lie(LieElt::gen(i), N)));

  std::vector<SpecialDerivation> out;
  for (int k = 1; k <= N; ++k) {
    std::vector<LieElt> c(g), h(g);
    for (int j = 0; j < g; ++j) c[j] = cfull[j].component(k);
    if (k < N) {
      for (int i = 0; i < g; ++i) h[i] = hfull[i].component(k + 1);
    } else {
      h = d0_to_d1(c, g, k);  // beyond the truncation; determined by c
    }
    out.push_back(make_sder(g, k, std::move(c), std::move(h)));
  }
  return out;
}

}  // namespace hg

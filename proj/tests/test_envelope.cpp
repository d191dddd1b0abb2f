#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/envelope.hpp"

using namespace hg;

namespace {
Word A(int i, long e = 1) { return Word::gen(GenKind::A, i, e); }
Word B(int i, long e = 1) { return Word::gen(GenKind::B, i, e); }
Word X(int i, long e = 1) { return Word::gen(GenKind::X, i, e); }

Word random_word(std::mt19937& rng, int genus, int len) {
  Word w;
  std::uniform_int_distribution<int> kind(0, 1), idx(1, genus), sgn(0, 1);
  for (int t = 0; t < len; ++t)
    w = w * Word::gen(kind(rng) ? GenKind::B : GenKind::A, idx(rng), sgn(rng) ? 1 : -1);
  return w;
}

LieElt random_lie(std::mt19937& rng, int genus, int deg, int terms) {
  std::uniform_int_distribution<int> idx(1, genus), coe(-2, 2);
  LieElt u;
  for (int t = 0; t < terms; ++t) {
    LieElt e = LieElt::gen(idx(rng));
    for (int d = 1; d < deg; ++d) e = lie_bracket(e, LieElt::gen(idx(rng)));
    u = u + e * Rat(coe(rng));
  }
  return u;
}
}  // namespace

TEST_CASE("twisted product") {
  int N = 3;
  EnvElt xa = env_mul(EnvElt::group(X(1), N), EnvElt::from_lie(LieElt::gen(1), N));
  EnvElt expect(N);
  expect.add_term({Letter{X(1), 1}}, X(1), Rat(1));
  CHECK(xa == expect);

  EnvElt ax = env_mul(EnvElt::from_lie(LieElt::gen(1), N), EnvElt::group(X(1), N));
  EnvElt expect2(N);
  expect2.add_term({Letter{Word(), 1}}, X(1), Rat(1));
  CHECK(ax == expect2);

  std::mt19937 rng(71);
  for (int t = 0; t < 10; ++t) {
    auto rnd = [&]() {
      EnvElt e(N);
      std::uniform_int_distribution<int> coe(-2, 2), idx(1, 2), len(0, 2);
      for (int k = 0; k < 3; ++k) {
        TWord v;
        int n = len(rng);
        for (int j = 0; j < n; ++j) v.push_back(Letter{Word(), idx(rng)});
        e.add_term(v, X(idx(rng), rng() % 2 ? 1 : -1), Rat(coe(rng)));
      }
      return e;
    };
    EnvElt a = rnd(), b = rnd(), c = rnd();
    CHECK(env_mul(env_mul(a, b), c) == env_mul(a, env_mul(b, c)));
  }
}

TEST_CASE("exp and log") {
  LieElt a1 = LieElt::gen(1), a2 = LieElt::gen(2);
  EnvElt e = env_exp(a1, 2);
  EnvElt expect = EnvElt::one(2) + EnvElt::from_lie(a1, 2);
  expect.add_term({Letter{Word(), 1}, Letter{Word(), 1}}, Word(), Rat(1, 2));
  CHECK(e == expect);
  CHECK(env_log(env_exp(a1, 4)) == a1);

  LieElt bch = env_log(env_mul(env_exp(a1, 3), env_exp(a2, 3)));
  CHECK(bch.component(1) == a1 + a2);
  CHECK(bch.component(2) == lie_bracket(a1, a2) * Rat(1, 2));
  CHECK(env_exp(bch, 3) == env_mul(env_exp(a1, 3), env_exp(a2, 3)));

  std::mt19937 rng(73);
  for (int N = 2; N <= 5; ++N) {
    LieElt u = random_lie(rng, 2, 1, 2) + random_lie(rng, 2, 2, 2);
    CHECK(env_log(env_exp(u, N)) == u.truncated(N));
  }
}

TEST_CASE("inverses") {
  Expansion th = theta_standard(2, 4);
  std::mt19937 rng(79);
  for (int t = 0; t < 8; ++t) {
    Word w = random_word(rng, 2, 5);
    EnvElt e = theta_eval(th, w);
    CHECK(env_mul(e, env_inv(e)) == EnvElt::one(4));
    CHECK(env_inv(e) == theta_eval(th, w.inverse()));
  }
}

TEST_CASE("standard expansion") {
  Expansion th = theta_standard(2, 3);
  CHECK(validate_expansion(th));
  CHECK(th.ell_alpha[0] == LieElt::gen(1));
  CHECK(theta_eval(th, B(2)) == EnvElt::group(X(2), 3));

  CHECK(ell(th, A(1) * A(2)).truncated(2) ==
        LieElt::gen(1) + LieElt::gen(2) + lie_bracket(LieElt::gen(1), LieElt::gen(2)) * Rat(1, 2));

  // theta(alpha_1 beta_1) = exp(a1) (x) x1
  EnvElt img = theta_eval(th, A(1) * B(1));
  CHECK(img == env_mul(env_exp(LieElt::gen(1), 3), EnvElt::group(X(1), 3)));

  // standard theta is not special in general
  Expansion t1 = theta_standard(1, 2);
  LieElt lz = ell(t1, zeta(1));
  CHECK(lz.component(1) == zeta_class(1));
  CHECK(!lz.component(2).is_zero());
  CHECK(!is_special(t1));

  std::mt19937 rng(83);
  for (int t = 0; t < 12; ++t) {
    Word u = random_word(rng, 2, 4), v = random_word(rng, 2, 4);
    Expansion t2 = theta_standard(2, 3);
    CHECK(theta_eval(t2, u * v) == env_mul(theta_eval(t2, u), theta_eval(t2, v)));
    CHECK(theta_eval(t2, u).f_trivial() == in_A(u));
  }
}

TEST_CASE("ell lowest term equals graded class") {
  Expansion th = theta_standard(2, 3);
  std::mt19937 rng(89);
  for (int t = 0; t < 6; ++t) {
    Word u;
    std::uniform_int_distribution<int> idx(1, 2), sgn(0, 1);
    for (int k = 0; k < 3; ++k) {
      Word c = random_word(rng, 2, 2);
      u = u * A(idx(rng), sgn(rng) ? 1 : -1).conj(c);
    }
    LieElt L = ell(th, u);
    if (!L.component(1).is_zero()) {
      CHECK(L.component(1) == class_of(u, 2, 1));
    } else {
      CHECK(L.component(2) == class_of(u, 2, 2));
    }
  }
}

TEST_CASE("special expansions") {
  for (int g = 1; g <= 2; ++g) {
    std::vector<LieElt> conj;
    Expansion th = special_construct(g, 4, &conj);
    CHECK(is_special(th));
    // degree-1 conjugators: v_k = (1/2) sum_{j<k} d_j
    for (int k = 0; k < 2 * g; ++k) {
      LieElt expect;
      for (int j = 0; j < k; ++j) expect = expect + LieElt::gen(j + 1) * Rat(1, 2);
      CHECK(conj[k].component(1) == expect);
    }
  }
  CHECK(is_special(special_construct(3, 3)));
  // serialization round trip
  Expansion th = special_construct(2, 4);
  Expansion back = Expansion::parse(th.str());
  CHECK(back.genus == th.genus);
  CHECK(back.N == th.N);
  for (int i = 0; i < 2; ++i) {
    CHECK(back.ell_alpha[i] == th.ell_alpha[i]);
    CHECK(back.m_beta[i] == th.m_beta[i]);
  }
}

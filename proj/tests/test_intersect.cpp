#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <tuple>

#include "hg/intersect.hpp"

using namespace hg;

namespace {
Word A(int i, long e = 1) { return Word::gen(GenKind::A, i, e); }
Word B(int i, long e = 1) { return Word::gen(GenKind::B, i, e); }
Word X(int i, long e = 1) { return Word::gen(GenKind::X, i, e); }

Word random_pi(std::mt19937& rng, int genus, int len) {
  Word w;
  std::uniform_int_distribution<int> kind(0, 1), idx(1, genus), sgn(0, 1);
  for (int t = 0; t < len; ++t)
    w = w * Word::gen(kind(rng) ? GenKind::B : GenKind::A, idx(rng), sgn(rng) ? 1 : -1);
  return w;
}

Word random_f(std::mt19937& rng, int genus, int len) {
  Word w;
  std::uniform_int_distribution<int> idx(1, genus), sgn(0, 1);
  for (int t = 0; t < len; ++t) w = w * X(idx(rng), sgn(rng) ? 1 : -1);
  return w;
}

Letter random_letter(std::mt19937& rng, int genus, int beads) {
  std::uniform_int_distribution<int> idx(1, genus);
  return Letter{random_f(rng, genus, beads), idx(rng)};
}

LieElt lie_of(const Letter& l) { return LieElt::letter(l.f, l.idx); }

GR bar(const GR& u) { return u.antipode(); }

// triple tensors in Z[F] (x) Z[F] (x) A_ab, for the three-slot identities
using Triple = std::map<std::tuple<Word, Word, Letter>, Rat>;
void tadd(Triple& t, const Word& f1, const Word& f2, const Letter& l, const Rat& c) {
  if (c == 0) return;
  auto k = std::make_tuple(f1, f2, l);
  auto& x = t[k];
  x += c;
  if (x == 0) t.erase(k);
}
}  // namespace

TEST_CASE("eta basic values") {
  CHECK(eta(B(1), A(1)) == -GR(1));
  CHECK(eta(A(1), B(1)) == GR::of(A(1)) + GR::of(B(1)) - GR(1));
  CHECK(eta(A(1), A(1)) == GR::of(A(1)) - GR(1));
  CHECK(eta(B(1), B(1)) == GR::of(B(1)) - GR(1));
  CHECK(eta(A(2), A(1)) == (GR::of(A(2)) - GR(1)) * (GR::of(A(1)) - GR(1)) * Rat(-1));
  CHECK(eta(A(1), A(2)).is_zero());
  std::mt19937 rng(97);
  CHECK(eta(GR(1), GR::of(random_pi(rng, 2, 4))).is_zero());
}

TEST_CASE("eta is a Fox pairing") {
  std::mt19937 rng(101);
  for (int t = 0; t < 12; ++t) {
    Word x = random_pi(rng, 2, 3), xp = random_pi(rng, 2, 3), y = random_pi(rng, 2, 3);
    CHECK(eta(x * xp, y) == GR::of(x) * eta(xp, y) + eta(x, y));
    CHECK(eta(y, x * xp) == eta(y, x) * GR::of(xp) + eta(y, xp));
  }
}

TEST_CASE("eta skew property") {
  std::mt19937 rng(103);
  for (int t = 0; t < 12; ++t) {
    Word u = random_pi(rng, 2, 4), v = random_pi(rng, 2, 4);
    GR rhs = -(GR::of(u) * bar(eta(v, u)) * GR::of(v)) -
             (GR::of(u) - GR(1)) * (GR::of(v) - GR(1));
    CHECK(eta(u, v) == rhs);
  }
}

TEST_CASE("pairing") {
  CHECK(pairing(GR::of(X(1)) - GR(1), LieElt::gen(1)) == -GR(1));
  CHECK(pairing(GR(1), LieElt::gen(1)).is_zero());
  CHECK(pairing(GR::of(X(1) * X(2)) - GR(1), LieElt::gen(2)) == -GR::of(X(1)));

  // matrix of the pairing on (x_i - 1, a_j) is minus the identity
  int g = 3;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      GR p = pairing(GR::of(X(i)) - GR(1), LieElt::gen(j));
      CHECK(p == (i == j ? -GR(1) : GR()));
    }

  // right linearity over the bead: <x, ^f a> = <x, a> f^-1
  std::mt19937 rng(107);
  for (int t = 0; t < 10; ++t) {
    Word x = random_f(rng, 2, 4), f = random_f(rng, 2, 2);
    Letter l = random_letter(rng, 2, 0);
    CHECK(pairing(GR::of(x), LieElt::letter(f * l.f, l.idx)) ==
          pairing(GR::of(x), lie_of(l)) * GR::of(f.inverse()));
  }
}

TEST_CASE("theta values and properties") {
  TensorPair th = theta_pair(GR::of(X(1)), LieElt::gen(1));
  TensorPair expect;
  expect.add_term(X(1), Word(), Rat(-1));
  CHECK(th == expect);
  CHECK(theta_pair(GR(1), LieElt::gen(2)).is_zero());

  std::mt19937 rng(109);
  for (int t = 0; t < 10; ++t) {
    Word x = random_f(rng, 2, 3), y = random_f(rng, 2, 3), f = random_f(rng, 2, 2);
    Letter a = random_letter(rng, 2, 1);
    LieElt al = lie_of(a);

    // left property over products in the first slot
    TensorPair lhs = theta_pair(GR::of(x * y), al);
    TensorPair thy = theta_pair(GR::of(y), al), thx = theta_pair(GR::of(x), al);
    TensorPair rhs;
    for (const auto& [k, c] : thy.terms()) rhs.add_term(k.first, x * k.second, c);
    for (const auto& [k, c] : thx.terms()) rhs.add_term(k.first * y, k.second, c);
    CHECK(lhs == rhs);

    // equivariance over the bead of the second slot
    TensorPair lhs2 = theta_pair(GR::of(x), LieElt::letter(f * a.f, a.idx));
    TensorPair rhs2;
    for (const auto& [k, c] : thx.terms()) rhs2.add_term(f * k.first, k.second * f.inverse(), c);
    CHECK(lhs2 == rhs2);

    // inversion
    TensorPair lhs3 = theta_pair(GR::of(x.inverse()), al);
    TensorPair rhs3;
    for (const auto& [k, c] : thx.terms()) rhs3.add_term(k.second.inverse(), k.first.inverse(), -c);
    CHECK(lhs3 == rhs3);
  }
}

TEST_CASE("psi values") {
  TensorA p = psi(LieElt::gen(1), LieElt::gen(1));
  TensorA expect;
  expect.add_term(Word(), Letter{Word(), 1}, Rat(1));
  CHECK(p == expect);
  CHECK(psi(LieElt::gen(1), LieElt::gen(2)).is_zero());

  TensorA q = psi(LieElt::letter(X(1), 1), LieElt::gen(1));
  TensorA expect2;
  expect2.add_term(X(1), Letter{Word(), 1}, Rat(1));
  expect2.add_term(Word(), Letter{X(1), 1}, Rat(1));
  CHECK(q == expect2);

  // Psi(a, [zeta]) = 1 (x) a
  std::mt19937 rng(113);
  for (int g = 1; g <= 2; ++g) {
    for (int t = 0; t < 8; ++t) {
      Letter a = random_letter(rng, g, int(rng() % 3));
      TensorA id;
      id.add_term(Word(), a, Rat(1));
      CHECK(psi(lie_of(a), zeta_class(g)) == id);
    }
  }
}

TEST_CASE("psi symmetry and confluence") {
  std::mt19937 rng(127);
  for (int t = 0; t < 20; ++t) {
    Letter a = random_letter(rng, 2, int(rng() % 3));
    Letter b = random_letter(rng, 2, int(rng() % 3));
    TensorA ab = psi(lie_of(a), lie_of(b));
    CHECK(ab == psi_alt(lie_of(a), lie_of(b)));
    // Psi(b,a) from Psi(a,b): (f (x) l) -> (f^-1 (x) ^f l)
    TensorA sym;
    for (const auto& [k, c] : ab.terms())
      sym.add_term(k.first.inverse(), Letter{k.first * k.second.f, k.second.idx}, c);
    CHECK(psi(lie_of(b), lie_of(a)) == sym);
  }
}

TEST_CASE("psi three-slot identities") {
  std::mt19937 rng(131);
  auto psi_ll = [](const Letter& u, const Letter& v) { return psi(lie_of(u), lie_of(v)); };
  for (int t = 0; t < 12; ++t) {
    Letter a = random_letter(rng, 2, int(rng() % 3));
    Letter b = random_letter(rng, 2, int(rng() % 3));
    Letter c = random_letter(rng, 2, int(rng() % 3));
    TensorA ba = psi_ll(b, a), ac = psi_ll(a, c), bc = psi_ll(b, c);

    {
      Triple lhs, rhs;
      for (const auto& [k1, c1] : ba.terms()) {
        TensorA inner = psi(lie_of(k1.second), lie_of(c));
        for (const auto& [k2, c2] : inner.terms())
          tadd(lhs, k1.first, k2.first, k2.second, c1 * c2);
      }
      for (const auto& [kf, cf] : ac.terms()) {
        TensorA inner = psi(lie_of(b), lie_of(kf.second));
        for (const auto& [kg, cg] : inner.terms())
          tadd(rhs, kg.first * kf.first.inverse(), kf.first, kg.second, cf * cg);
        GR pb = pairing(GR::of(kf.first), lie_of(b));
        for (const auto& [h, ch] : pb.terms())
          tadd(rhs, h.inverse(), kf.first, kf.second, -cf * ch);
      }
      for (const auto& [kf, cf] : bc.terms()) {
        TensorPair th = theta_pair(GR::of(kf.first), lie_of(a));
        for (const auto& [kt, ct] : th.terms())
          tadd(rhs, kt.second, kt.first, kf.second, -cf * ct);
      }
      CHECK(lhs == rhs);
    }

    {
      Triple lhs, rhs;
      for (const auto& [k1, c1] : ac.terms()) {
        TensorA inner = psi(lie_of(b), lie_of(k1.second));
        for (const auto& [k2, c2] : inner.terms())
          tadd(lhs, k1.first, k2.first, k2.second, c1 * c2);
      }
      for (const auto& [kf, cf] : ba.terms()) {
        TensorA inner = psi(lie_of(kf.second), lie_of(c));
        for (const auto& [kg, cg] : inner.terms())
          tadd(rhs, kg.first, kf.first * kg.first, kg.second, cf * cg);
      }
      for (const auto& [kf, cf] : bc.terms()) {
        GR pa = pairing(GR::of(kf.first), lie_of(a));
        for (const auto& [h, ch] : pa.terms())
          tadd(rhs, h.inverse() * kf.first, kf.first, kf.second, cf * ch);
      }
      for (const auto& [kf, cf] : ac.terms()) {
        GR pb = pairing(GR::of(kf.first), lie_of(b));
        for (const auto& [h, ch] : pb.terms())
          tadd(rhs, kf.first, h.inverse() * kf.first, kf.second, cf * ch);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("psi against the intersection-form route") {
  TensorA id1;
  id1.add_term(Word(), Letter{Word(), 1}, Rat(1));
  CHECK(psi_oracle(A(1), A(1)) == id1);
  CHECK(psi_oracle(A(1), A(2)).is_zero());
  CHECK_THROWS_AS(psi_oracle(B(1), A(1)), WordError);

  std::mt19937 rng(137);
  for (int t = 0; t < 14; ++t) {
    std::uniform_int_distribution<int> idx(1, 2), sgn(0, 1);
    Word ca = random_pi(rng, 2, int(rng() % 3));
    Word cb = random_pi(rng, 2, int(rng() % 3));
    Word wa = A(idx(rng), sgn(rng) ? 1 : -1).conj(ca);
    Word wb = A(idx(rng), sgn(rng) ? 1 : -1).conj(cb);
    CHECK(psi_oracle(wa, wb) == psi(class_of(wa, 2, 1), class_of(wb, 2, 1)));
  }
}

TEST_CASE("tensor printing") {
  TensorA u;
  u.add_term(X(1), Letter{X(2, -1), 2}, Rat(-2));
  CHECK(u.str() == "- 2*(x1 | (x2^-1 . a2))");
  TensorPair v;
  v.add_term(Word(), X(1), Rat(1, 2));
  CHECK(v.str() == "1/2*(1 | x1)");
}

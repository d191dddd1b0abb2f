#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/words.hpp"

using namespace hg;

namespace {
Word A(int i, long e = 1) { return Word::gen(GenKind::A, i, e); }
Word B(int i, long e = 1) { return Word::gen(GenKind::B, i, e); }

Word random_word(std::mt19937& rng, int genus, int len) {
  Word w;
  std::uniform_int_distribution<int> kind(0, 1), idx(1, genus), sgn(0, 1);
  for (int t = 0; t < len; ++t)
    w = w * Word::gen(kind(rng) ? GenKind::B : GenKind::A, idx(rng), sgn(rng) ? 1 : -1);
  return w;
}
}  // namespace

TEST_CASE("reduction") {
  CHECK((A(1) * A(1, -1)).is_identity());
  CHECK(A(1) * B(2) * B(2, -1) * A(1) == A(1, 2));
  Word w = A(1) * B(2, -3) * A(2);
  CHECK(Word::from_syllables(w.syllables()) == w);
  CHECK(w.length() == 5);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"", "a1 b2^-1", "a1^2 b2^-3 a2", "b3 a1^-1 b3^-1"}) {
    Word w = Word::parse(s);
    CHECK(Word::parse(w.str()) == w);
    CHECK(w.str() == Word::parse(w.str()).str());
  }
  CHECK(Word::parse("a1 a1^-1").is_identity());
  CHECK_THROWS_AS(Word::parse("q1"), WordError);
  CHECK_THROWS_AS(Word::parse("a0"), WordError);
}

TEST_CASE("varpi and A-membership") {
  CHECK(varpi(A(1) * B(2)) == Word::gen(GenKind::X, 2));
  CHECK(varpi(B(1) * A(3) * B(1, -1) * B(2)) == Word::gen(GenKind::X, 2));
  for (int g = 1; g <= 3; ++g) CHECK(in_A(zeta(g)));
  CHECK(in_A(A(1)));
  CHECK(!in_A(B(1)));
  CHECK(in_A(A(1).conj(B(2))));
  // homomorphism
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    CHECK(varpi(u * v) == varpi(u) * varpi(v));
  }
}

TEST_CASE("zeta") {
  Word z1 = zeta(1);
  CHECK(z1 == A(1) * B(1, -1) * A(1, -1) * B(1));
  CHECK(zeta(2).length() == 8);
}

TEST_CASE("endo application is multiplicative") {
  Endo f = twist_alpha(3, 1);
  CHECK(f.apply(B(1, -1)) == B(1, -1) * A(1, -1));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    CHECK(f.apply(u * v) == f.apply(u) * f.apply(v));
  }
  Endo id = identity_endo(2);
  Word w = random_word(rng, 2, 8);
  CHECK(id.apply(w) == w);
}

TEST_CASE("boundary twist conjugates") {
  Endo t = twist_boundary(1);
  Word z = zeta(1);
  CHECK(t.apply(A(1)) == z * A(1) * z.inverse());
  CHECK(t.apply(B(1)) == z * B(1) * z.inverse());
  CHECK(t.apply(z) == z);
}

TEST_CASE("catalog verification") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(verify_pair_automorphism(twist_boundary(g)) == PairCheck::OK);
    for (int i = 1; i <= g; ++i)
      CHECK(verify_pair_automorphism(twist_alpha(g, i)) == PairCheck::OK);
  }
  CHECK(verify_G_membership(elem_d(2, 1, -1, B(2))) == PairCheck::OK);
  CHECK(verify_G_membership(elem_e(3, 1, 2, B(1) * B(3))) == PairCheck::OK);
  CHECK(verify_G_membership(phi(2, 1, 2, B(1))) == PairCheck::OK);
  CHECK(elem_d(2, 1, 1, Word()).is_identity_images());

  // phi(1,2,b)(beta_1) = (b alpha_2 b^{-1}) beta_1, beta_2 fixed
  Word b = B(2);
  Endo p = phi(3, 1, 2, b);
  CHECK(p.image_b(1) == b * A(2) * b.inverse() * B(1));
  CHECK(p.image_b(2) == B(2));
  CHECK(p.image_b(3) == B(3));

  // lift of a nontrivial F-automorphism is in G but not in H
  std::vector<Word> im = {Word::parse("x1 x2"), Word::parse("x2")};
  std::vector<Word> inv = {Word::parse("x1 x2^-1"), Word::parse("x2")};
  Endo l = aut_F_lift(2, im, inv);
  CHECK(verify_G_membership(l) == PairCheck::OK);
  CHECK(verify_pair_automorphism(l) == PairCheck::NOT_ZETA_FIXING);

  // broken zeta-fixing detection
  Endo bad(2, {A(1), A(2)}, {B(1) * A(1), B(2)});
  Endo badinv(2, {A(1), A(2)}, {B(1) * A(1, -1), B(2)});
  bad.set_inverse(badinv);
  CHECK(verify_pair_automorphism(bad) == PairCheck::NOT_ZETA_FIXING);
}

TEST_CASE("word order is total and length-first") {
  CHECK(Word() < A(1));
  CHECK(A(1) < A(1, 2));
  CHECK(A(1) < A(1, -1));
  CHECK(A(2) < B(1));
}

#pragma once

#include <vector>

#include "hg/envelope.hpp"
#include "hg/intersect.hpp"

namespace hg {

// Degree-k special derivation of the extended graded Lie algebra, recorded by
// its values on both kinds of generators: c on x_1..x_g (values of degree k)
// and h on a_1..a_g (values of degree k+1).
struct SpecialDerivation {
  int genus = 0;
  int degree = 1;
  std::vector<LieElt> c;
  std::vector<LieElt> h;
};

// Validating constructor: checks homogeneity, that h is the value derived from
// c (throws CodedError("NOT_IN_D0") when c fails the coinvariant condition),
// and that the induced derivation kills [zeta].
SpecialDerivation make_sder(int genus, int degree, std::vector<LieElt> c,
                            std::vector<LieElt> h);

// h-values determined by the cocycle values c (degree k), via a bracket-trivial
// lift and the intersection operation. Throws CodedError("NOT_IN_D0").
std::vector<LieElt> d0_to_d1(const std::vector<LieElt>& c, int genus, int degree);

// Cocycle extension to words in the x's: c(xy) = c(x) + x.c(y).
LieElt cocycle_eval(const SpecialDerivation& d, const Word& f);

// Derivation extension: ^x a_i -> x.h_i + [c(x), ^x a_i], Leibniz on brackets.
LieElt sder_apply(const SpecialDerivation& d, const LieElt& u);

SpecialDerivation sder_bracket(const SpecialDerivation& d, const SpecialDerivation& e);

// Johnson homomorphism values of f at filtration depth k >= 1, relative to the
// expansion th. Throws CodedError("F_NOT_IN_H_K") naming the witnessing
// generator and degree when f is not in the k-th filtration term.
std::vector<LieElt> tau0(const Endo& f, int k, const Expansion& th);
std::vector<LieElt> tau1(const Endo& f, int k, const Expansion& th);
// Both halves packed as a special derivation (cross-checked on construction).
SpecialDerivation tau(const Endo& f, int k, const Expansion& th);

// Largest k <= N with f in the k-th filtration term; N+1 encodes "> N".
// The beta side determines the answer; the alpha side is cross-checked.
int jf_degree(const Endo& f, int N);

// Degree components 1..th.N of the logarithm of the automorphism of the
// truncated envelope induced by f. Requires f in the twist group and th special.
std::vector<SpecialDerivation> varrho(const Endo& f, const Expansion& th);

}  // namespace hg

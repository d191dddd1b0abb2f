#pragma once

#include "hg/groupring.hpp"
#include "hg/words.hpp"

namespace hg {

// Left Fox derivative of a pi-word (or Z[pi] element) with respect to generator z.
// Satisfies d(uv) = d(u) + u d(v), d(z) = 1, d(z^{-1}) = -z^{-1}.
GR fox_left(const Word& w, GenKind k, int idx);
GR fox_left(const GR& u, GenKind k, int idx);

// Right Fox derivative: d(uv) = d(u) v + d(v); for group words
// d_right(w, z) = z^{-1} bar(d_left(w, z)) w.
GR fox_right(const Word& w, GenKind k, int idx);
GR fox_right(const GR& u, GenKind k, int idx);

// Free Jacobian: 2g x 2g over Z[pi], entry (i,j) = bar(d f(z_j) / d z_i),
// generator order (alpha_1..alpha_g, beta_1..beta_g).
Mat jacobian(const Endo& f);

// Entrywise varpi of jacobian; checks the A-preservation precondition.
Mat jacobian_F(const Endo& f);

// Blocks of jacobian_F: mag00 = lower-right (beta x beta), mag10 = upper-left
// (alpha x alpha), mag01 = upper-right; mag01 requires identity diagonal blocks.
Mat mag00(const Endo& f);
Mat mag10(const Endo& f);
Mat mag01(const Endo& f);

// kappa: class of a in A_ab as a row vector (varpi(da/dalpha_1), ...).
std::vector<GR> kappa(const Word& a, int genus);

bool hermitian_check(const Endo& f);

}  // namespace hg

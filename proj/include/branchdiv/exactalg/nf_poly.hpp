#pragma once

#include "branchdiv/exactalg/number_field.hpp"

#include <utility>
#include <vector>

namespace branchdiv {

using KUPoly = UPoly<FieldElem>;

KUPoly to_kupoly(const UPoly<Rational>& p);
// Coefficients lifted to polynomials in the generator; requires all in one field.
bool is_rational_poly(const KUPoly& p);
UPoly<Rational> to_rational_poly(const KUPoly& p);

// Norm of h down to Q: Res_t(m(t), h(x - k t)).
UPoly<Rational> shifted_norm(const KUPoly& h, const FieldPtr& K, int k);

// Monic irreducible factors over K (Trager); K null means Q.
std::vector<std::pair<KUPoly, int>> factor_over(const KUPoly& h, const FieldPtr& K);

// L = K(beta) for a root beta of an irreducible h over K, as a simple extension of Q.
struct Extension {
    FieldPtr field;   // null when L = Q
    FieldElem alpha;  // image of K's generator in L (unused when K is Q)
    FieldElem beta;   // root of h in L
};
Extension adjoin_root(const FieldPtr& K, const KUPoly& h);

// Roots in K of a polynomial over K (linear factors only), with multiplicity.
std::vector<std::pair<FieldElem, int>> roots_in(const KUPoly& h, const FieldPtr& K);

} // namespace branchdiv

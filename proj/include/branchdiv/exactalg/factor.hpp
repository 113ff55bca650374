#pragma once

#include "branchdiv/exactalg/upoly.hpp"

#include <utility>
#include <vector>

namespace branchdiv {

using ZPoly = std::vector<Integer>;

// Integer multiple with content 1 and positive leading coefficient.
ZPoly primitive_integer(const UPoly<Rational>& f);
UPoly<Rational> to_rational(const ZPoly& f);

// Monic gcd over Q by the multi-modular method, verified by exact division.
UPoly<Rational> gcd_q(const UPoly<Rational>& a, const UPoly<Rational>& b);

// Monic irreducible factors over Q with multiplicities; sorted by (degree, coefficients).
std::vector<std::pair<UPoly<Rational>, int>> factor_q(const UPoly<Rational>& f);

bool is_irreducible_q(const UPoly<Rational>& f);

// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly<Rational>& f);

// Deterministic ordering used for canonical output.
bool poly_less(const UPoly<Rational>& a, const UPoly<Rational>& b);

} // namespace branchdiv

#pragma once

// Brute-force elimination used to cross-check the pipeline: Sylvester
// determinants by Bareiss elimination at integer points, Lagrange
// interpolation, weighted degree bounds. Shares only the polynomial
// containers with the library.

#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/exactalg/mpoly.hpp"

#include <array>
#include <vector>

namespace oracle {

using branchdiv::MPoly;
using branchdiv::Rational;
using Q = branchdiv::UPoly<Rational>;

Rational bareiss_det(std::vector<std::vector<Rational>> m);

// Sylvester determinant of a, b with formal degrees m >= deg a, n >= deg b.
Rational sylvester(const Q& a, int m, const Q& b, int n);

Q lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

int weighted_degree(const MPoly& p, const std::vector<int>& w);

// Polynomial in the variable `keep` vanishing on the projection of the
// common zeros (product of chain resultants through every pivot/pair,
// combined by gcd). Zero if every chain vanishes.
Q eliminant(const std::vector<MPoly>& eqs, int keep, const std::vector<int>& weights);

// Common zeros of a zero-dimensional system in at most 3 variables, as closed
// points. Eliminant in one coordinate, then every fiber over its factors by
// Sylvester determinants over the factor's field. Throws std::domain_error on
// positive-dimensional input.
std::vector<branchdiv::ClosedPoint> solve(const std::vector<MPoly>& eqs, const std::vector<int>& weights);

// One chain: Res_y(Res_z(p, a), Res_z(p, b)) as a polynomial in `keep`.
Q chain(const MPoly& p, const MPoly& a, const MPoly& b, int keep, int y, int z, const std::vector<int>& weights);

// Squarefree monic part (1 for nonzero constants).
Q squarefree(const Q& p);

// Quartic hypersurface from coefficients; Q uses the order q00 q01 .. q04 q11 .. q44.
MPoly branch_quartic(const std::array<Rational, 5>& f, const std::array<Rational, 15>& q, const branchdiv::Vars& z);

} // namespace oracle

#pragma once

#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/exactalg/mpoly.hpp"

#include <string>
#include <vector>

namespace branchdiv {

struct SolveOptions {
    int degree_cap = 4;          // largest residue-field degree reported with coordinates
    int multiplicity_order = 8;  // jet order bound for multiplicity certificates
    bool multiplicities = true;
};

struct SolvedPoint {
    ClosedPoint point;  // affine coordinates in variable order
    int multiplicity = -1;
    bool multiplicity_certified = false;
};

// A factor of the x0-eliminant whose fiber needs a field of degree above the cap
// (or could not be refuted); the factor itself is the certificate.
struct ResidualFactor {
    UPoly<Rational> factor;
    int field_degree_lower_bound = 0;
};

struct SolveResult {
    std::vector<SolvedPoint> points;
    std::vector<ResidualFactor> residuals;
    UPoly<Rational> eliminant;          // squarefree x0-eliminant before refutation
    std::vector<UPoly<Rational>> refuted; // factors shown to carry no solution
};

// Common zeros over Q-bar of polynomials in at most 3 variables.
// Throws DimensionError when the solution set is not zero-dimensional.
SolveResult solve_zero_dim(const std::vector<MPoly>& system, const SolveOptions& opts = {});

// Multiplicity of the solution scheme at a point (local algebra dimension).
struct Multiplicity {
    int value = -1;
    bool certified = false;
};
Multiplicity point_multiplicity(const std::vector<MPoly>& system, const std::vector<FieldElem>& point, int max_order);

} // namespace branchdiv

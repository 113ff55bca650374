#pragma once

#include "branchdiv/branch/curves.hpp"
#include "branchdiv/branch/spec.hpp"
#include "branchdiv/exactalg/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace branchdiv::quadric {

// Coefficients of a quadratic form on P^4 in the order q00 q01 .. q04 q11 .. q44.
using QuadVec = std::array<Rational, 15>;

MPoly quadric_form(const QuadVec& v);
QuadVec quadric_coeffs(const MPoly& q); // throws std::invalid_argument unless homogeneous of degree 2

// Rows c with c . v = 0 iff the quadric v lies in the degree-2 part of the
// curve's ideal (residual coefficients after reduction of the 15 monomials).
Matrix<Rational> containment_conditions(const branch::DoubleCurve& curve);

struct QuadricSpace {
    std::vector<QuadVec> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
    bool contains(const QuadVec& v) const;
};

QuadricSpace kernel_space(const Matrix<Rational>& conditions);

struct FitReport {
    QuadricSpace space;
    bool generic = false;          // dimension exactly 2
    bool contains_scroll = false;  // z0^2 - z1 z2
    bool contains_q = false;       // the spec's Q
    std::array<int, 5> without_curve{}; // kernel dimension with curve i+1 left out
    int condition_rank = 0;
};

FitReport fit_span(const branch::BranchSpec& spec);
FitReport fit_span(const std::vector<branch::DoubleCurve>& curves, const MPoly& Q);

// a B = b A + c (z0^2 - z1 z2) with a, b != 0: equal modulo the scroll and scale.
bool same_mod_scroll(const MPoly& A, const MPoly& B);

struct StepwiseResult {
    MPoly Q;
    std::array<Rational, 4> a{}; // z0z3, z1z3, z2z3, z3^2 (points with z4 = 0)
    std::array<Rational, 4> b{}; // z0z4, z1z4, z2z4, z4^2 (points with z3 = 0)
    Rational c;                  // z3z4 (fixed by the ridge points)
    bool contains_all_curves = false;
    std::vector<std::string> flags; // non-generic conditions met on the way
    bool ok() const { return flags.empty() && contains_all_curves; }
};

// q: real conic in z0, z1, z2 through the four points of C3 cap C4.
StepwiseResult stepwise_construct(const branch::IntersectionReport& points, const std::vector<branch::DoubleCurve>& curves, const MPoly& q);

// Q(z0, z1, z2, 0, 0).
MPoly q_choice_from_spec(const branch::BranchSpec& spec);

} // namespace branchdiv::quadric

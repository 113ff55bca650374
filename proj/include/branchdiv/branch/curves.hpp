#pragma once

#include "branchdiv/branch/spec.hpp"
#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <string>
#include <vector>

namespace branchdiv::branch {

enum class CurveType { Conic, Quartic };
std::string to_string(CurveType t);

struct DoubleCurve {
    int index = 0;                // 1..5
    std::vector<MPoly> generators; // C1 (z0, z1, Q), C2 (z0, z2, Q), C3..C5 (h, Q, G)
    std::vector<MPoly> linear;     // the linear generators cutting the plane / hyperplane
    CurveType type = CurveType::Conic;
    int degree = 0;                // points on a general hyperplane
    bool doubled = false;          // F = -Q^2 modulo the linear generators
};

// Throws DegenerateSpecError when two curves coincide or a curve is not a curve.
std::vector<DoubleCurve> double_curves(const BranchSpec& spec);

// Does the closed point lie on the curve?
bool on_curve(const DoubleCurve& c, const ClosedPoint& p);

// Projective point value of a polynomial at a canonical projective closed point.
FieldElem eval_at(const MPoly& p, const ClosedPoint& pt);

struct IntersectionPoint {
    ClosedPoint point; // projective, first nonzero coordinate 1
    int multiplicity = 1;
    int geometric() const { return point.degree(); }
};

struct PairIntersection {
    int i = 0, j = 0;
    std::vector<IntersectionPoint> points;
    int count() const; // geometric points, multiplicities ignored
};

struct IntersectionReport {
    std::vector<PairIntersection> pairs; // (1,2), (1,3) .. (4,5)
    int ridge = 0, line = 0, conic = 0;  // (2, 12, 12) generically
    int total() const { return ridge + line + conic; }
    int conjugate_pairs = 0;
    int real_points = 0;
    bool multiple_roots = false;
    std::vector<ClosedPoint> all_points() const;
};

IntersectionReport curve_intersections(const BranchSpec& spec);

// Q restricted to each of the ten pairwise loci (l, the six lines, the three plane conics) is nonzero.
bool intersection_forms_nonzero(const BranchSpec& spec);

// Binary quartic in (s, t) cut on Y by two linear forms whose (z3, z4) block is
// invertible: (z0, z1, z2) = (st, s^2, t^2), z3 and z4 solved linearly.
// Returns the form and the parametrization of all five coordinates.
struct PlaneConic {
    Vars vars; // s, t
    std::array<MPoly, 5> coords;
};
PlaneConic plane_conic(const std::array<Rational, 5>& h1, const std::array<Rational, 5>& h2);

} // namespace branchdiv::branch

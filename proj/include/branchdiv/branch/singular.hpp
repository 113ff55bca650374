#pragma once

#include "branchdiv/branch/curves.hpp"
#include "branchdiv/branch/spec.hpp"
#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/lattice/euler.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <optional>
#include <string>
#include <vector>

namespace branchdiv::branch {

struct NonIsolatedError : DegenerateSpecError {
    using DegenerateSpecError::DegenerateSpecError;
};

// Truncated power series at the origin, exact through total degree `order`.
struct LocalGerm {
    KPoly series;
    int order = 8;
    std::string provenance;
};

struct MilnorReport {
    std::optional<int> mu; // empty when not certified at the germ's order
    int corank = -1;
    std::string classification; // "A1", "A<k>", "unclassified" or "undetermined"
    int determinacy_k = -1;     // m^k lies in the Jacobian ideal
};

// Throws std::invalid_argument if the germ does not vanish at the origin or has a
// nonzero linear part.
MilnorReport milnor_corank(const LocalGerm& germ);

// Germ u^4 g(y, z, u) - yz of B at a ridge point, g(0) != 0.
struct RidgeGerm {
    LocalGerm germ;
    scroll::Chart chart = scroll::Chart::RidgeZ4;
    FieldElem v0;        // ridge coordinate of the point in the chart
    FieldElem c;         // dQ/dv at the point
    FieldElem unit0;     // v f at the point
    FieldElem g0;        // g(0,0,0) = 1 / unit0^2
    // In variables (x, y, z, u): w(x, y, z, u) with Q = u, and x(y, z, u) on B.
    KPoly w_series, x_series;
};

// `point` is a ridge point (0:0:0:a:b), possibly over a number field.
RidgeGerm ridge_germ(const BranchSpec& spec, const ClosedPoint& point, int order = 8);

enum class Locus { Ridge, CurvePair, Extra };
std::string to_string(Locus l);

struct ChartMilnor {
    scroll::Chart chart;
    MilnorReport milnor;
};

struct SingularPoint {
    ClosedPoint point; // projective, first nonzero coordinate 1
    Locus locus = Locus::Extra;
    std::vector<int> curves; // double curves through the point
    std::optional<int> mu;
    int corank = -1;
    std::string classification;
    std::vector<ChartMilnor> charts;
    bool chart_consistent = true;

    int geometric() const { return point.degree(); }
};

// Eliminant factor whose points need a field of degree above the solver cap.
struct UnresolvedFactor {
    scroll::Chart chart;
    UPoly<Rational> factor;
};

struct SingularLocus {
    std::vector<SingularPoint> points;
    std::vector<UnresolvedFactor> unresolved;
    int geometric_count() const;
};

struct SingularOptions {
    int order = 8;      // jet order for Milnor numbers
    int degree_cap = 4; // largest residue field reported with coordinates
    std::vector<scroll::Chart> charts{scroll::Chart::Z1, scroll::Chart::Z2};
};

// Throws NonIsolatedError when a chart Jacobian scheme is positive-dimensional.
SingularLocus singular_points(const BranchSpec& spec, const SingularOptions& opts = {});

struct Census {
    SingularLocus locus;
    int a1_curve_pairs = 0; // geometric points
    int a3_ridge = 0;
    int other_curve_pairs = 0;
    int other_ridge = 0;
    std::vector<lattice::ExtraSingularity> extras;   // found on the spec
    std::vector<lattice::ExtraSingularity> injected; // supplied by the caller
    lattice::EulerLedger ledger;
    std::string status; // "generic-family" or "twistor-compatible"
};

// Extra points enter the ledger with e(beta) = 2 (exceptional curve a P^1).
Census census(const BranchSpec& spec, const std::vector<lattice::ExtraSingularity>& injected = {}, const SingularOptions& opts = {});

} // namespace branchdiv::branch

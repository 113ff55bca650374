#pragma once

#include "branchdiv/exactalg/binary_form.hpp"
#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/exactalg/mpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace branchdiv::scroll {

// z0..z4 and the scroll Y = {z0^2 = z1 z2}.
const Vars& projective_vars();
MPoly z(int i);
MPoly scroll_form();

using ProjPoint = std::vector<FieldElem>; // 5 homogeneous coordinates

bool on_scroll(const ProjPoint& p);
bool on_ridge(const ProjPoint& p); // z0 = z1 = z2 = 0

struct Hyperplane {
    std::array<FieldElem, 5> a;
    static Hyperplane coordinate(int i);
    MPoly form() const; // requires rational coefficients
};

enum class SectionType { PairOfPlanes, DoublePlane, Cone };
std::string to_string(SectionType t);

struct SectionClass {
    SectionType type;
    std::optional<ProjPoint> vertex; // cones only: the point l cap H
};

// Throws std::invalid_argument for the zero hyperplane.
SectionClass classify_section(const Hyperplane& H);

enum class Chart { Z1, Z2, RidgeZ3, RidgeZ4 };
std::string to_string(Chart c);

struct ChartPoint {
    Chart chart;
    std::vector<FieldElem> coords; // (s,t,u) on Y-charts, (x,y,z,v) on ridge charts
};

struct ChartError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ProjPoint chart_embed(const ChartPoint& p);
ChartPoint chart_pull(const ProjPoint& q, Chart chart);

// Variables and restriction of a form on P4 to a chart:
// Z1: g(s,t,u) = F(s,1,s^2,t,u); Z2: F(s,s^2,1,t,u);
// RidgeZ4: F(x,y,z,v,1); RidgeZ3: F(x,y,z,1,v).
const Vars& chart_vars(Chart c);
MPoly chart_restrict(const MPoly& F, Chart c);

struct RidgePoint {
    ProjPoint point;
    int multiplicity = 1;
    int orbit_size = 1;
    std::optional<size_t> conjugate;
};

struct RidgeReport {
    std::vector<RidgePoint> points;
    bool double_root = false; // Q restricted to l has a repeated root
};

// Roots of Q(0,0,0,z3,z4). Throws DegenerateSpecError if Q vanishes on l.
RidgeReport ridge_points(const MPoly& Q);

// Projective point as a canonical closed point (first nonzero coordinate 1).
ClosedPoint canonical(const ProjPoint& p);

} // namespace branchdiv::scroll

#pragma once

#include "branchdiv/branch/singular.hpp"
#include "branchdiv/exactalg/closed_point.hpp"
#include "branchdiv/exactalg/mpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace branchdiv::branch {

// W = {x^2 = yz, w^2 = u^2 - x} in C^5 with coordinates (x, y, z, u, w), blown up
// along the plane {x = y = z = 0}. Chart k sets the k-th of x, y, z as the
// exceptional coordinate and divides the other two by it.
struct BlowupChart {
    std::string name;                 // "x", "y" or "z"
    Vars vars;                        // e.g. (x1, y, z1, u, w) for chart y
    std::vector<MPoly> strict;        // generators of the strict transform
    bool smooth = false;
};

struct BlowupSingularPoint {
    std::string chart;
    ClosedPoint affine;    // chart coordinates
    ClosedPoint base;      // image in C^5
    ClosedPoint direction; // [X : Y : Z] in the exceptional P^2
    MilnorReport milnor;
    int hessian_rank = -1;
};

struct AppendixReport {
    // lines of Sing W through the origin, as projective directions in C^5
    std::vector<ClosedPoint> sing_w_lines;
    bool sing_w_isolated_part_empty = false; // nothing besides the lines

    std::vector<BlowupChart> charts;
    std::vector<BlowupSingularPoint> singular; // merged across charts
    int exceptional_components = 0;            // over the center, in chart y

    MPoly fiber_conic;          // fiber over the origin in the exceptional P^2
    bool fiber_smooth = false;
    bool fiber_rational = false; // smooth conic with a rational point

    std::array<std::string, 4> planes;
    std::array<int, 4> contains_line{};             // index into sing_w_lines, -1 if none
    std::array<std::array<bool, 4>, 4> meet{};      // strict transforms intersect
    std::array<std::array<bool, 4>, 4> meet_before{};

    bool separation_ok() const; // (P1, P2) and (P3, P4) separated
    bool passed() const;
};

AppendixReport appendix_blowup_check(int order = 8);

} // namespace branchdiv::branch

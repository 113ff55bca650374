#pragma once

#include "branchdiv/exactalg/mpoly.hpp"

#include <optional>
#include <vector>

namespace branchdiv {

// One root [x : y] of a binary form. Quadratic orbits are listed as both
// conjugate roots over the same field; cubic and quartic orbits are listed
// once with orbit_size = field degree.
struct BinaryRoot {
    FieldElem x, y;
    int multiplicity = 1;
    int orbit_size = 1;
    std::optional<size_t> conjugate; // index of the conjugate root in the list
};

// Roots of a nonzero binary form of degree <= 4 in the variables vx, vy.
// Throws UnsupportedDegreeError above degree 4.
std::vector<BinaryRoot> binary_form_roots(const MPoly& b, int vx, int vy);

// Product of the linear factors (orbit factors for listed orbits), for checks.
MPoly expand_roots(const std::vector<BinaryRoot>& roots, const Vars& vars, int vx, int vy);

} // namespace branchdiv

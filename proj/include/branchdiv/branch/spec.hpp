#pragma once

#include "branchdiv/exactalg/mpoly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace branchdiv::branch {

// f = sum f_i z_i, Q = sum_{i<=j} q_ij z_i z_j with q listed as
// q00 q01 q02 q03 q04 q11 q12 q13 q14 q22 q23 q24 q33 q34 q44.
struct BranchSpec {
    std::array<Rational, 5> f{};
    std::array<Rational, 15> q{};

    MPoly f_form() const;
    MPoly q_form() const;
};

size_t q_index(int i, int j);
BranchSpec spec_from_forms(const MPoly& f, const MPoly& Q);

struct GenericityReport {
    bool q_transversal = false;      // Q restricted to l has two simple roots
    bool ridge_off_h3 = false;
    bool ridge_off_h4 = false;
    bool ridge_off_f = false;
    bool f_section_cone = false;     // {f = 0} does not contain l
    bool planes_avoid_ridge = false; // {z3 = f = 0} and {z4 = f = 0} miss l
    bool curves_distinct = false;    // five distinct curves, none a whole plane or surface
    bool intersections_finite = false; // no two curves share a component

    bool all() const;
    std::vector<std::string> failures() const;
};

struct Assembly {
    MPoly F;
    GenericityReport genericity;
};

// F = z0 z3 z4 f - Q^2. Throws DegenerateSpecError for f = 0, Q = 0 or Q in (z0^2 - z1 z2).
Assembly assemble(const BranchSpec& spec);
GenericityReport genericity(const BranchSpec& spec);

// Seeded spec with |num|, den <= 9: Q positive definite (diagonally dominant),
// f3 f4 != 0, redrawn until every genericity flag holds.
BranchSpec random_spec(std::uint64_t seed);

} // namespace branchdiv::branch

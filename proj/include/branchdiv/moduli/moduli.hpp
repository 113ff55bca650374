#pragma once

#include "branchdiv/branch/spec.hpp"

#include <array>
#include <string>
#include <vector>

namespace branchdiv::moduli {

// (f0..f4, q00..q44)
using CoeffVector = std::array<Rational, 20>;

CoeffVector to_vector(const branch::BranchSpec& spec);
branch::BranchSpec from_vector(const CoeffVector& v);

struct Generator {
    std::string name;
    CoeffVector value;
};

// Tangent vectors at spec of: rescale (c^2 f, c Q); the Y-preserving torus
// (ab z0, a^2 z1, b^2 z2, c z3, d z4) in a, b, c, d; the shift Q + c (z0^2 - z1 z2).
std::vector<Generator> equivalence_generators(const branch::BranchSpec& spec);

// Weights of z0..z4 under the torus flows a, b, c, d.
const std::array<std::array<int, 5>, 4>& torus_weights();

int rank_of(const std::vector<Generator>& gens);
int orbit_rank(const branch::BranchSpec& spec);

// Finite torus element: spec' with z0 z3 z4 f' - Q'^2 = F(ab z0, a^2 z1, b^2 z2, c z3, d z4).
branch::BranchSpec apply_torus(const branch::BranchSpec& spec, const Rational& a, const Rational& b, const Rational& c, const Rational& d);
// F composed with the same substitution.
MPoly substituted_quartic(const branch::BranchSpec& spec, const Rational& a, const Rational& b, const Rational& c, const Rational& d);

struct ParameterReport {
    int parameters = 20;
    int orbit_rank = 0;
    int effective = 0;         // parameters - orbit_rank
    int node_codimension = 6;  // stated, not recomputed
    int after_nodes = 0;       // effective - node_codimension
    int h1_theta = 13;
    int kuranishi_pairs = 9;
    std::string note;
};

ParameterReport parameter_report(const branch::BranchSpec& spec);

} // namespace branchdiv::moduli

#include "branchdiv/moduli/moduli.hpp"

#include "branchdiv/exactalg/linalg.hpp"
#include "branchdiv/scroll/scroll.hpp"

namespace branchdiv::moduli {

using branch::q_index;

CoeffVector to_vector(const branch::BranchSpec& spec) {
    CoeffVector v{};
    for (size_t i = 0; i < 5; ++i) v[i] = spec.f[i];
    for (size_t i = 0; i < 15; ++i) v[5 + i] = spec.q[i];
    return v;
}

branch::BranchSpec from_vector(const CoeffVector& v) {
    branch::BranchSpec s;
    for (size_t i = 0; i < 5; ++i) s.f[i] = v[i];
    for (size_t i = 0; i < 15; ++i) s.q[i] = v[5 + i];
    return s;
}

const std::array<std::array<int, 5>, 4>& torus_weights() {
    static const std::array<std::array<int, 5>, 4> w{{{1, 2, 0, 0, 0}, {1, 0, 2, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}};
    return w;
}

std::vector<Generator> equivalence_generators(const branch::BranchSpec& spec) {
    std::vector<Generator> out;
    const CoeffVector v = to_vector(spec);
    {
        Generator g{"rescale", {}};
        for (size_t i = 0; i < 5; ++i) g.value[i] = 2 * v[i];
        for (size_t i = 5; i < 20; ++i) g.value[i] = v[i];
        out.push_back(std::move(g));
    }
    const char* names[4] = {"torus_a", "torus_b", "torus_c", "torus_d"};
    for (size_t t = 0; t < 4; ++t) {
        const auto& w = torus_weights()[t];
        Generator g{names[t], {}};
        // f picks up the factor on z0 z3 z4 as well as its own weight
        const int base = w[0] + w[3] + w[4];
        for (size_t i = 0; i < 5; ++i) g.value[i] = (base + w[i]) * v[i];
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) {
                const size_t k = 5 + q_index(i, j);
                g.value[k] = (w[static_cast<size_t>(i)] + w[static_cast<size_t>(j)]) * v[k];
            }
        out.push_back(std::move(g));
    }
    {
        Generator g{"ideal_shift", {}};
        g.value[5 + q_index(0, 0)] = 1;
        g.value[5 + q_index(1, 2)] = -1;
        out.push_back(std::move(g));
    }
    return out;
}

int rank_of(const std::vector<Generator>& gens) {
    Matrix<Rational> M(0, 0);
    for (const auto& g : gens) M.append_row(std::vector<Rational>(g.value.begin(), g.value.end()));
    return gens.empty() ? 0 : static_cast<int>(rank(M));
}

int orbit_rank(const branch::BranchSpec& spec) { return rank_of(equivalence_generators(spec)); }

namespace {

std::array<Rational, 5> lambdas(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return {a * b, a * a, b * b, c, d}; }

} // namespace

branch::BranchSpec apply_torus(const branch::BranchSpec& spec, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const auto l = lambdas(a, b, c, d);
    const Rational base = l[0] * l[3] * l[4];
    branch::BranchSpec s;
    for (size_t i = 0; i < 5; ++i) s.f[i] = base * l[i] * spec.f[i];
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) s.q[q_index(i, j)] = l[static_cast<size_t>(i)] * l[static_cast<size_t>(j)] * spec.q[q_index(i, j)];
    return s;
}

MPoly substituted_quartic(const branch::BranchSpec& spec, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const auto l = lambdas(a, b, c, d);
    std::vector<std::optional<MPoly>> img;
    for (int i = 0; i < 5; ++i) img.push_back(l[static_cast<size_t>(i)] * scroll::z(i));
    return branch::assemble(spec).F.compose(scroll::projective_vars(), img);
}

ParameterReport parameter_report(const branch::BranchSpec& spec) {
    ParameterReport r;
    r.orbit_rank = orbit_rank(spec);
    r.effective = r.parameters - r.orbit_rank;
    r.after_nodes = r.effective - r.node_codimension;
    r.note = "the family count gives " + std::to_string(r.effective) + " effective parameters; the six-node condition lowers it to " +
             std::to_string(r.after_nodes) + ", equal to the 9-dimensional Kuranishi family of pairs; a moduli dimension of " +
             std::to_string(r.effective) + " after the node condition does not follow from this chain (unresolved)";
    return r;
}

} // namespace branchdiv::moduli

#include "../support/poly_parse.hpp"

#include "branchdiv/moduli/moduli.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <doctest.h>

using namespace branchdiv;
using namespace branchdiv::moduli;

namespace {

MPoly P(const std::string& s) { return testsupport::poly(scroll::projective_vars(), s); }

const Generator& named(const std::vector<Generator>& g, const std::string& n) {
    for (const auto& x : g)
        if (x.name == n) return x;
    throw std::runtime_error("no generator " + n);
}

// Derivative at a = 1 of a polynomial sampled at a = 1..n (Lagrange basis derivative).
Rational derivative_at_one(const std::vector<Rational>& ys) {
    const size_t n = ys.size();
    Rational d = 0;
    for (size_t i = 0; i < n; ++i) {
        const Rational xi = static_cast<long>(i + 1);
        Rational denom = 1;
        for (size_t j = 0; j < n; ++j)
            if (j != i) denom *= xi - Rational(static_cast<long>(j + 1));
        // derivative of prod_{j != i} (x - xj) at x = 1
        Rational s = 0;
        for (size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            Rational p = 1;
            for (size_t j = 0; j < n; ++j)
                if (j != i && j != k) p *= Rational(1) - Rational(static_cast<long>(j + 1));
            s += p;
        }
        d += ys[i] * s / denom;
    }
    return d;
}

} // namespace

TEST_CASE("coefficient vectors round trip") {
    const auto spec = branch::random_spec(4);
    const auto back = from_vector(to_vector(spec));
    CHECK(back.f == spec.f);
    CHECK(back.q == spec.q);
}

TEST_CASE("rescale and ideal shift generators") {
    const auto spec = branch::random_spec(1);
    const auto gens = equivalence_generators(spec);
    CHECK(gens.size() == 6);
    const auto v = to_vector(spec);
    const auto& r = named(gens, "rescale").value;
    for (size_t i = 0; i < 5; ++i) CHECK(r[i] == 2 * v[i]);
    for (size_t i = 5; i < 20; ++i) CHECK(r[i] == v[i]);
    const auto& s = named(gens, "ideal_shift").value;
    CoeffVector expect{};
    expect[5 + branch::q_index(0, 0)] = 1;
    expect[5 + branch::q_index(1, 2)] = -1;
    CHECK(s == expect);
}

TEST_CASE("torus generators are derivatives of the finite action") {
    const auto spec = branch::spec_from_forms(P("z1"), P("z1*z3"));
    const auto gens = equivalence_generators(spec);
    const std::array<const char*, 4> names{"torus_a", "torus_b", "torus_c", "torus_d"};
    for (size_t t = 0; t < 4; ++t) {
        std::vector<CoeffVector> samples;
        for (long a = 1; a <= 9; ++a) {
            std::array<Rational, 4> arg{1, 1, 1, 1};
            arg[t] = a;
            samples.push_back(to_vector(apply_torus(spec, arg[0], arg[1], arg[2], arg[3])));
        }
        const auto& g = named(gens, names[t]).value;
        for (size_t i = 0; i < 20; ++i) {
            std::vector<Rational> ys;
            for (const auto& s : samples) ys.push_back(s[i]);
            CHECK(derivative_at_one(ys) == g[i]);
        }
    }
}

TEST_CASE("torus action preserves the quartic") {
    const auto spec = branch::random_spec(2);
    const Rational a(2), b(-3), c(1, 2), d(5);
    const auto moved = apply_torus(spec, a, b, c, d);
    CHECK(branch::assemble(moved).F == substituted_quartic(spec, a, b, c, d));
    CHECK(orbit_rank(moved) == orbit_rank(spec));
}

TEST_CASE("orbit rank and parameter chain") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto spec = branch::random_spec(seed);
        CHECK(orbit_rank(spec) == 5);
        auto gens = equivalence_generators(spec);
        gens.push_back(gens[2]);
        CHECK(rank_of(gens) == 5);
        const auto r = parameter_report(spec);
        CHECK(r.parameters == 20);
        CHECK(r.effective == 15);
        CHECK(r.node_codimension == 6);
        CHECK(r.after_nodes == 9);
        CHECK(r.h1_theta == 13);
        CHECK(r.kuranishi_pairs == 9);
        CHECK_FALSE(r.note.empty());
    }
}

TEST_CASE("weights of the torus flows") {
    const auto& w = torus_weights();
    CHECK(w[0] == std::array<int, 5>{1, 2, 0, 0, 0});
    CHECK(w[1] == std::array<int, 5>{1, 0, 2, 0, 0});
    CHECK(w[2] == std::array<int, 5>{0, 0, 0, 1, 0});
    CHECK(w[3] == std::array<int, 5>{0, 0, 0, 0, 1});
}

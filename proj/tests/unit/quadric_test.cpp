#include "../support/poly_parse.hpp"

#include "branchdiv/exactalg/ideal.hpp"
#include "branchdiv/quadric/quadric.hpp"

#include <doctest.h>

using namespace branchdiv;
using namespace branchdiv::quadric;

namespace {

MPoly P(const std::string& s) { return testsupport::poly(scroll::projective_vars(), s); }

bool satisfies(const Matrix<Rational>& m, const QuadVec& v) {
    for (size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < 15; ++j) s += m(i, j) * v[j];
        if (s != 0) return false;
    }
    return true;
}

// q restricted to z0 = z1 = 0, as coefficients of z2^2 z2z3 z2z4 z3^2 z3z4 z4^2.
std::array<Rational, 6> restrict01(const QuadVec& v) {
    using branch::q_index;
    return {v[q_index(2, 2)], v[q_index(2, 3)], v[q_index(2, 4)], v[q_index(3, 3)], v[q_index(3, 4)], v[q_index(4, 4)]};
}

bool proportional(const std::array<Rational, 6>& a, const std::array<Rational, 6>& b) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

TEST_CASE("quadric coefficient round trip") {
    const MPoly q = P("z0^2 - z1*z2 + 3*z3*z4 - 1/2*z4^2");
    CHECK(quadric_form(quadric_coeffs(q)) == q);
    CHECK_THROWS_AS(quadric_coeffs(P("z0^3")), std::invalid_argument);
}

TEST_CASE("containment conditions") {
    const auto spec = branch::random_spec(2);
    const auto curves = branch::double_curves(spec);
    const QuadVec scroll = quadric_coeffs(scroll::scroll_form());
    const QuadVec Q = quadric_coeffs(spec.q_form());
    const std::array<size_t, 5> ranks{5, 5, 8, 8, 8};
    for (size_t i = 0; i < 5; ++i) {
        const auto m = containment_conditions(curves[i]);
        CHECK(rank(m) == ranks[i]);
        CHECK(satisfies(m, scroll));
        CHECK(satisfies(m, Q));
    }
    // C1: a quadric contains the curve iff its restriction to z0 = z1 = 0 is a multiple of Q's
    const auto k = kernel_space(containment_conditions(curves[0]));
    CHECK(k.dimension() == 10);
    for (const auto& v : k.basis) {
        const auto r = restrict01(v);
        bool zero = true;
        for (const auto& x : r) zero = zero && x == 0;
        CHECK((zero || proportional(r, restrict01(Q))));
    }
}

TEST_CASE("fit span on random specs") {
    for (std::uint64_t seed : {1u, 3u, 5u}) {
        const auto spec = branch::random_spec(seed);
        const auto fit = fit_span(spec);
        CHECK(fit.space.dimension() == 2);
        CHECK(fit.generic);
        CHECK(fit.contains_scroll);
        CHECK(fit.contains_q);
        CHECK(fit.condition_rank == 13);
    }
}

TEST_CASE("an extra condition row cuts the span to the scroll") {
    const auto spec = branch::random_spec(1);
    Matrix<Rational> all;
    for (const auto& c : branch::double_curves(spec)) {
        const auto m = containment_conditions(c);
        for (size_t i = 0; i < m.rows(); ++i) all.append_row(m.row(i));
    }
    CHECK(kernel_space(all).dimension() == 2);
    // vanish at a point of Y off the curves
    std::vector<Rational> row;
    const std::array<Rational, 5> p{1, 1, 1, 2, 3};
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) row.push_back(p[static_cast<size_t>(i)] * p[static_cast<size_t>(j)]);
    all.append_row(row);
    const auto k = kernel_space(all);
    CHECK(k.dimension() == 1);
    CHECK(k.contains(quadric_coeffs(scroll::scroll_form())));
}

TEST_CASE("Q equal to the scroll is rejected upstream") {
    const auto spec = branch::spec_from_forms(P("z3 + z4"), scroll::scroll_form());
    CHECK_THROWS_AS(fit_span(spec), DegenerateSpecError);
}

TEST_CASE("same modulo the scroll") {
    const MPoly s = scroll::scroll_form();
    const MPoly A = P("z0*z3 + z4^2");
    CHECK(same_mod_scroll(A, 3 * A + Rational(2) * s));
    CHECK_FALSE(same_mod_scroll(A, P("z0*z3")));
    CHECK_FALSE(same_mod_scroll(A, s));
}

TEST_CASE("stepwise construction") {
    const auto spec = branch::random_spec(3);
    const auto curves = branch::double_curves(spec);
    const auto pts = branch::curve_intersections(spec);
    const auto fit = fit_span(curves, spec.q_form());

    const auto from_q = stepwise_construct(pts, curves, q_choice_from_spec(spec));
    CHECK(from_q.ok());
    CHECK(same_mod_scroll(from_q.Q, spec.q_form()));
    CHECK(fit.space.contains(quadric_coeffs(from_q.Q)));

    const auto from_s = stepwise_construct(pts, curves, scroll::scroll_form());
    CHECK(from_s.ok());
    CHECK(from_s.Q == scroll::scroll_form());
    CHECK(reduce_mod(from_s.Q, basis_if_coprime_leads({scroll::scroll_form()})).is_zero());

    // another member of the pencil
    const MPoly mix = q_choice_from_spec(spec) + Rational(5) * scroll::scroll_form();
    const auto from_mix = stepwise_construct(pts, curves, mix);
    CHECK(from_mix.ok());
    CHECK(same_mod_scroll(from_mix.Q, from_q.Q));
    CHECK(fit.space.contains(quadric_coeffs(from_mix.Q)));
}

#include "../support/poly_parse.hpp"

#include "branchdiv/branch/appendix.hpp"
#include "branchdiv/branch/curves.hpp"
#include "branchdiv/branch/singular.hpp"
#include "branchdiv/branch/spec.hpp"
#include "branchdiv/lattice/euler.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace branchdiv;
using namespace branchdiv::branch;
using testsupport::poly;

namespace {

MPoly P(const std::string& s) { return poly(scroll::projective_vars(), s); }

// dim Q[x]/(J + m^K) by row reduction over the monomials of degree < K.
int truncated_quotient_dim(const MPoly& g, int K) {
    const int n = g.nvars();
    std::vector<Monomial> mons;
    std::map<Monomial, size_t> col;
    std::vector<unsigned> e(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            Monomial m = make_monomial(e);
            col[m] = mons.size();
            mons.push_back(m);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<size_t>(i)] = static_cast<unsigned>(a);
            rec(i + 1, left - a);
        }
        e[static_cast<size_t>(i)] = 0;
    };
    rec(0, K - 1);
    std::vector<std::vector<Rational>> rows;
    for (int v = 0; v < n; ++v) {
        const MPoly d = g.differentiate(v);
        for (Monomial m : mons) {
            std::vector<Rational> row(mons.size(), Rational(0));
            bool any = false;
            for (const auto& [t, c] : d.terms()) {
                const Monomial s = t + m;
                if (static_cast<int>(monomial_degree(s)) >= K) continue;
                row[col.at(s)] += c;
                any = true;
            }
            if (any) rows.push_back(row);
        }
    }
    // plain Gaussian elimination
    size_t r = 0;
    for (size_t c = 0; c < mons.size() && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (size_t j = c; j < mons.size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(mons.size() - r);
}

// Milnor number when dim stabilizes between K and K+1 (Nakayama), -1 otherwise.
int brute_milnor(const MPoly& g, int max_k = 12) {
    int prev = truncated_quotient_dim(g, 1);
    for (int K = 2; K <= max_k; ++K) {
        const int d = truncated_quotient_dim(g, K);
        if (d == prev) return d;
        prev = d;
    }
    return -1;
}

struct GermCase {
    const char* germ;
    int mu;
    int corank;
    const char* classification;
    double weights[3]; // quasi-homogeneous weights, 0 if not quasi-homogeneous
};

const std::vector<GermCase>& corpus() {
    static const std::vector<GermCase> c{
        {"x^2 + y^2 + z^2", 1, 0, "A1", {0.5, 0.5, 0.5}},
        {"x^2 + y^2 + z^3", 2, 1, "A2", {0.5, 0.5, 1.0 / 3}},
        {"z^4 - x*y", 3, 1, "A3", {0.5, 0.5, 0.25}},
        {"x^2 + y^2 + z^6", 5, 1, "A5", {0.5, 0.5, 1.0 / 6}},
        {"x^3 + y^3 + z^3", 8, 3, "unclassified", {1.0 / 3, 1.0 / 3, 1.0 / 3}},
        {"x^2*y + y^3 + z^2", 4, 2, "unclassified", {1.0 / 3, 1.0 / 3, 0.5}},
        {"x^2 + y^3 + z^4", 6, 2, "unclassified", {0.5, 1.0 / 3, 0.25}},
        {"x^2 + y^3 + z^5", 8, 2, "unclassified", {0.5, 1.0 / 3, 0.2}},
        {"x^2 + y^2 + z^2 + x^3 + y*z^2", 1, 0, "A1", {0, 0, 0}},
        {"x*y + z^3 + x^4 + y^2*z", 2, 1, "A2", {0, 0, 0}},
        {"x^2 + y^3 + y*z^3", 7, 2, "unclassified", {0.5, 1.0 / 3, 2.0 / 9}},
    };
    return c;
}

BranchSpec small_spec() {
    return spec_from_forms(P("z0 + z1 - z2 + z3 + z4"), P("2*z0^2 + z0*z3 + 3*z1^2 + z1*z2 + z1*z4 + 3*z2^2 + z2*z4 + 2*z3^2 + z3*z4 + 2*z4^2"));
}

} // namespace

TEST_CASE("Milnor corpus against brute-force local algebra") {
    auto v = make_vars({"x", "y", "z"});
    for (const auto& c : corpus()) {
        CAPTURE(c.germ);
        const MPoly g = poly(v, c.germ);
        const int oracle = brute_milnor(g);
        CHECK(oracle == c.mu);
        if (c.weights[0] > 0) {
            double mo = 1;
            for (double w : c.weights) mo *= (1 / w - 1);
            CHECK(static_cast<int>(mo + 0.5) == c.mu);
        }
        const auto m = milnor_corank(LocalGerm{to_field(g), 10, "corpus"});
        REQUIRE(m.mu);
        CHECK(*m.mu == oracle);
        CHECK(m.corank == c.corank);
        CHECK(m.classification == c.classification);
    }
}

TEST_CASE("non-isolated and invalid germs") {
    auto v = make_vars({"x", "y", "z"});
    const auto m = milnor_corank(LocalGerm{to_field(poly(v, "x^2 + y^2")), 8, ""});
    CHECK_FALSE(m.mu);
    CHECK(m.classification == "undetermined");
    CHECK_THROWS_AS(milnor_corank(LocalGerm{to_field(poly(v, "x + y^2")), 8, ""}), std::invalid_argument);
    CHECK_THROWS_AS(milnor_corank(LocalGerm{to_field(poly(v, "1 + x^2")), 8, ""}), std::invalid_argument);
}

TEST_CASE("assembly") {
    const auto spec = spec_from_forms(P("z4"), P("z0^2"));
    CHECK(assemble(spec).F == P("z0*z3*z4^2 - z0^4"));
    CHECK_THROWS_AS(assemble(spec_from_forms(MPoly(scroll::projective_vars()), P("z3*z4"))), DegenerateSpecError);
    CHECK_THROWS_AS(assemble(spec_from_forms(P("z3"), MPoly(scroll::projective_vars()))), DegenerateSpecError);
    CHECK_THROWS_AS(assemble(spec_from_forms(P("z3 + z4"), P("2*z0^2 - 2*z1*z2"))), DegenerateSpecError);
}

TEST_CASE("random specs pass genericity, checked by direct substitution") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto spec = random_spec(seed);
        CHECK(genericity(spec).all());
        CHECK(spec.f == random_spec(seed).f);
        CHECK(spec.q == random_spec(seed).q);
        const MPoly Q = spec.q_form(), f = spec.f_form();
        // Q(0,0,0,z3,z4) = a z3^2 + b z3 z4 + c z4^2 has nonzero discriminant
        const Rational a = spec.q[q_index(3, 3)], b = spec.q[q_index(3, 4)], c = spec.q[q_index(4, 4)];
        CHECK(b * b - 4 * a * c != 0);
        // f, z3 and z4 do not vanish at the ridge points
        for (const auto& r : scroll::ridge_points(Q).points) {
            CHECK_FALSE(eval_at(f, scroll::canonical(r.point)).is_zero());
            CHECK_FALSE(r.point[3].is_zero());
            CHECK_FALSE(r.point[4].is_zero());
        }
    }
}

TEST_CASE("double curves") {
    const auto spec = random_spec(1);
    const auto cs = double_curves(spec);
    REQUIRE(cs.size() == 5);
    int conics = 0, quartics = 0;
    for (const auto& c : cs) {
        CHECK(c.doubled);
        (c.type == CurveType::Conic ? conics : quartics)++;
        CHECK(c.degree == (c.type == CurveType::Conic ? 2 : 4));
    }
    CHECK(conics == 2);
    CHECK(quartics == 3);
    // C1: F restricted to z0 = z1 = 0 is -Q(0,0,z2,z3,z4)^2
    const auto zero = MPoly(scroll::projective_vars());
    const MPoly F = assemble(spec).F;
    const MPoly Qr = spec.q_form().subst({{0, zero}, {1, zero}});
    CHECK(F.subst({{0, zero}, {1, zero}}) == -(Qr * Qr));
    CHECK(cs[0].generators[0] == P("z0"));
    CHECK(cs[0].generators[1] == P("z1"));

    auto bad = spec;
    bad.f = {0, 0, 0, 2, 0};
    CHECK_THROWS_AS(double_curves(bad), DegenerateSpecError);
}

TEST_CASE("intersection pattern on random specs") {
    for (std::uint64_t seed : {1u, 4u}) {
        const auto rep = curve_intersections(random_spec(seed));
        CHECK(rep.ridge == 2);
        CHECK(rep.line == 12);
        CHECK(rep.conic == 12);
        CHECK(rep.total() == 26);
        CHECK(rep.conjugate_pairs == 13);
        CHECK(rep.real_points == 0);
        CHECK_FALSE(rep.multiple_roots);
        // ridge pair: 2; plane conic with a quartic: 2 per pair; two quartics: 4 per pair
        for (const auto& pr : rep.pairs) CHECK(pr.count() == (pr.i <= 2 ? 2 : 4));
    }
}

TEST_CASE("ridge germ") {
    const auto spec = small_spec();
    const auto ridge = scroll::ridge_points(spec.q_form());
    REQUIRE(ridge.points.size() == 2);
    const ClosedPoint pt = scroll::canonical(ridge.points[0].point);
    const int N = 6;
    const auto R = ridge_germ(spec, pt, N);
    const auto m = milnor_corank(R.germ);
    REQUIRE(m.mu);
    CHECK(*m.mu == 3);
    CHECK(m.classification == "A3");
    CHECK(R.g0 == (R.unit0 * R.unit0).inv());
    CHECK(R.germ.series.coefficient(make_monomial({1, 1, 0})) == FieldElem(-1));

    // w and x solve the defining equations through order N
    const Vars& S = R.w_series.vars();
    const KPoly x = KPoly::variable(S, 0), u = KPoly::variable(S, 3);
    const KPoly vimg = KPoly::constant(S, R.v0) + R.w_series;
    auto to_series = [&](const MPoly& form, const KPoly& ximg) {
        const KPoly c = to_field(scroll::chart_restrict(form, R.chart));
        return c.compose(S, {ximg, KPoly::variable(S, 1), KPoly::variable(S, 2), vimg});
    };
    CHECK((to_series(spec.q_form(), x) - u).truncate(N).is_zero());
    const MPoly U = scroll::z(3) * scroll::z(4) * spec.f_form();
    // x_series has no constant term, so truncating before substituting is exact
    const KPoly Ux = to_series(U, x).truncate(N).compose(S, {R.x_series, std::nullopt, std::nullopt, std::nullopt}).truncate(N);
    CHECK((R.x_series * Ux - u * u).truncate(N).is_zero());
    const KPoly g = (R.x_series * R.x_series - KPoly::variable(S, 1) * KPoly::variable(S, 2)).truncate(N);
    for (const auto& [mono, coef] : g.terms()) CHECK(R.germ.series.coefficient(make_monomial({exponent(mono, 1), exponent(mono, 2), exponent(mono, 3)})) == coef);
    CHECK(g.terms().size() == R.germ.series.terms().size());
}

TEST_CASE("ridge germ needs a transversal Q") {
    const auto spec = spec_from_forms(P("z0 + z3 + z4"), P("z0^2 + z1*z3 + z2*z4 + z3^2 - 2*z3*z4 + z4^2"));
    const auto p = scroll::canonical({FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(1)});
    CHECK_THROWS_AS(ridge_germ(spec, p, 6), DegenerateSpecError);
}

TEST_CASE("census of a generic spec") {
    const auto spec = small_spec();
    REQUIRE(genericity(spec).all());
    const auto c = census(spec);
    CHECK(c.a1_curve_pairs == 24);
    CHECK(c.a3_ridge == 2);
    CHECK(c.other_curve_pairs == 0);
    CHECK(c.other_ridge == 0);
    CHECK(c.extras.empty());
    CHECK(c.locus.unresolved.empty());
    CHECK(c.locus.geometric_count() == 26);
    CHECK_FALSE(c.ledger.closed());
    CHECK(c.status == "generic-family");

    const auto curves = double_curves(spec);
    const auto pts = curve_intersections(spec).all_points();
    std::set<ClosedPoint> expected(pts.begin(), pts.end());
    std::set<ClosedPoint> got;
    for (const auto& p : c.locus.points) {
        got.insert(p.point);
        CHECK(p.chart_consistent);
        if (p.locus == Locus::CurvePair) {
            int on = 0;
            for (const auto& cv : curves) on += on_curve(cv, p.point);
            CHECK(on == 2);
            CHECK(p.classification == "A1");
        } else {
            CHECK(p.locus == Locus::Ridge);
            CHECK(p.classification == "A3");
        }
    }
    CHECK(got == expected);

    const auto six = census(spec, lattice::parse_extras("6x(1,2)"));
    CHECK(six.ledger.constraint_sum == 12);
    CHECK(six.ledger.e_B == 28);
    CHECK(six.ledger.e_Z4 == 10);
    CHECK(six.ledger.closed());
    CHECK(six.status == "twistor-compatible");
}

TEST_CASE("double plane makes the singular locus non-isolated") {
    const auto spec = spec_from_forms(P("z4"), P("z0^2"));
    CHECK_THROWS_AS(singular_points(spec), NonIsolatedError);
}

TEST_CASE("appendix blowup model") {
    const auto r = appendix_blowup_check();
    CHECK(r.sing_w_lines.size() == 2);
    CHECK(r.sing_w_isolated_part_empty);
    const auto l1 = canonical_projective({FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(1)});
    const auto l2 = canonical_projective({FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(-1)});
    CHECK(std::set<ClosedPoint>(r.sing_w_lines.begin(), r.sing_w_lines.end()) == std::set<ClosedPoint>{l1, l2});
    REQUIRE(r.singular.size() == 2);
    for (const auto& s : r.singular) {
        REQUIRE(s.milnor.mu);
        CHECK(*s.milnor.mu == 1);
        CHECK(s.milnor.corank == 0);
        CHECK(s.hessian_rank == 4);
    }
    CHECK(r.exceptional_components == 2);
    CHECK(r.fiber_smooth);
    CHECK(r.fiber_rational);
    for (int i = 0; i < 4; ++i) CHECK(r.contains_line[static_cast<size_t>(i)] >= 0);
    CHECK(r.contains_line[0] == r.contains_line[1]);
    CHECK(r.separation_ok());
    CHECK(r.passed());
}

#include "branchdiv/scroll/scroll.hpp"

namespace branchdiv::scroll {

const Vars& projective_vars() {
    static const Vars v = make_vars({"z0", "z1", "z2", "z3", "z4"});
    return v;
}

MPoly z(int i) { return MPoly::variable(projective_vars(), i); }

MPoly scroll_form() { return z(0) * z(0) - z(1) * z(2); }

bool on_scroll(const ProjPoint& p) { return p.size() == 5 && (p[0] * p[0] - p[1] * p[2]).is_zero(); }

bool on_ridge(const ProjPoint& p) { return p.size() == 5 && p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

Hyperplane Hyperplane::coordinate(int i) {
    Hyperplane H;
    for (auto& x : H.a) x = FieldElem(0);
    H.a.at(static_cast<size_t>(i)) = FieldElem(1);
    return H;
}

MPoly Hyperplane::form() const {
    MPoly h(projective_vars());
    for (int i = 0; i < 5; ++i) h += a[static_cast<size_t>(i)].rational_value() * z(i);
    return h;
}

std::string to_string(SectionType t) {
    switch (t) {
    case SectionType::PairOfPlanes: return "pair_of_planes";
    case SectionType::DoublePlane: return "double_plane";
    case SectionType::Cone: return "cone";
    }
    return "?";
}

SectionClass classify_section(const Hyperplane& H) {
    bool all_zero = true;
    for (const auto& x : H.a) all_zero = all_zero && x.is_zero();
    if (all_zero) throw std::invalid_argument("the zero form does not define a hyperplane");
    const auto& a = H.a;
    if (a[3].is_zero() && a[4].is_zero()) {
        // a0 w0 + a1 w1 + a2 w2 = 0 against w0^2 = w1 w2, parametrized by (st, s^2, t^2)
        FieldElem disc = a[0] * a[0] - FieldElem(4) * a[1] * a[2];
        return {disc.is_zero() ? SectionType::DoublePlane : SectionType::PairOfPlanes, std::nullopt};
    }
    ProjPoint v{FieldElem(0), FieldElem(0), FieldElem(0), a[4], -a[3]};
    return {SectionType::Cone, canonical(v).coords};
}

std::string to_string(Chart c) {
    switch (c) {
    case Chart::Z1: return "z1";
    case Chart::Z2: return "z2";
    case Chart::RidgeZ3: return "ridge_z3";
    case Chart::RidgeZ4: return "ridge_z4";
    }
    return "?";
}

ProjPoint chart_embed(const ChartPoint& p) {
    const auto& c = p.coords;
    switch (p.chart) {
    case Chart::Z1:
        if (c.size() != 3) throw ChartError("z1-chart points have 3 coordinates");
        return {c[0], FieldElem(1), c[0] * c[0], c[1], c[2]};
    case Chart::Z2:
        if (c.size() != 3) throw ChartError("z2-chart points have 3 coordinates");
        return {c[0], c[0] * c[0], FieldElem(1), c[1], c[2]};
    case Chart::RidgeZ3:
    case Chart::RidgeZ4: {
        if (c.size() != 4) throw ChartError("ridge-chart points have 4 coordinates");
        if (!(c[0] * c[0] - c[1] * c[2]).is_zero()) throw ChartError("point is not on the scroll (x^2 != yz)");
        if (p.chart == Chart::RidgeZ4) return {c[0], c[1], c[2], c[3], FieldElem(1)};
        return {c[0], c[1], c[2], FieldElem(1), c[3]};
    }
    }
    throw ChartError("unknown chart");
}

ChartPoint chart_pull(const ProjPoint& q, Chart chart) {
    if (q.size() != 5) throw ChartError("projective points have 5 coordinates");
    if (!on_scroll(q)) throw ChartError("point is not on the scroll");
    int k = 0;
    switch (chart) {
    case Chart::Z1: k = 1; break;
    case Chart::Z2: k = 2; break;
    case Chart::RidgeZ3: k = 3; break;
    case Chart::RidgeZ4: k = 4; break;
    }
    if (q[static_cast<size_t>(k)].is_zero()) {
        std::string why = on_ridge(q) ? " (point on the ridge line)" : "";
        throw ChartError("point lies outside the " + to_string(chart) + " chart" + why);
    }
    FieldElem inv = q[static_cast<size_t>(k)].inv();
    ChartPoint p{chart, {}};
    if (chart == Chart::Z1 || chart == Chart::Z2) p.coords = {q[0] * inv, q[3] * inv, q[4] * inv};
    else if (chart == Chart::RidgeZ4) p.coords = {q[0] * inv, q[1] * inv, q[2] * inv, q[3] * inv};
    else p.coords = {q[0] * inv, q[1] * inv, q[2] * inv, q[4] * inv};
    return p;
}

const Vars& chart_vars(Chart c) {
    static const Vars y = make_vars({"s", "t", "u"});
    static const Vars r = make_vars({"x", "y", "z", "v"});
    return (c == Chart::Z1 || c == Chart::Z2) ? y : r;
}

MPoly chart_restrict(const MPoly& F, Chart c) {
    const Vars& V = chart_vars(c);
    std::vector<std::optional<MPoly>> img(5);
    auto var = [&](int i) { return MPoly::variable(V, i); };
    auto one = MPoly::constant(V, Rational(1));
    switch (c) {
    case Chart::Z1: img = {var(0), one, var(0) * var(0), var(1), var(2)}; break;
    case Chart::Z2: img = {var(0), var(0) * var(0), one, var(1), var(2)}; break;
    case Chart::RidgeZ4: img = {var(0), var(1), var(2), var(3), one}; break;
    case Chart::RidgeZ3: img = {var(0), var(1), var(2), one, var(3)}; break;
    }
    return F.compose(V, img);
}

RidgeReport ridge_points(const MPoly& Q) {
    MPoly r = Q.subst({{0, MPoly(projective_vars())}, {1, MPoly(projective_vars())}, {2, MPoly(projective_vars())}});
    if (r.is_zero()) throw DegenerateSpecError("Q vanishes identically on the ridge line l (transversality fails)");
    RidgeReport rep;
    for (const auto& root : binary_form_roots(r, 3, 4)) {
        RidgePoint p;
        p.point = {FieldElem(0), FieldElem(0), FieldElem(0), root.x, root.y};
        p.multiplicity = root.multiplicity;
        p.orbit_size = root.orbit_size;
        p.conjugate = root.conjugate;
        if (root.multiplicity > 1) rep.double_root = true;
        rep.points.push_back(std::move(p));
    }
    return rep;
}

ClosedPoint canonical(const ProjPoint& p) { return canonical_projective(p); }

} // namespace branchdiv::scroll

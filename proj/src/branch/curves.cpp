#include "branchdiv/branch/curves.hpp"

#include "branchdiv/exactalg/binary_form.hpp"
#include "branchdiv/exactalg/ideal.hpp"

#include <algorithm>
#include <map>

namespace branchdiv::branch {

using scroll::z;

std::string to_string(CurveType t) { return t == CurveType::Conic ? "conic" : "quartic"; }

namespace {

std::array<Rational, 5> unit(int i) {
    std::array<Rational, 5> e{};
    e[static_cast<size_t>(i)] = 1;
    return e;
}

MPoly linear_form(const std::array<Rational, 5>& h) {
    MPoly r(scroll::projective_vars());
    for (int i = 0; i < 5; ++i) r += h[static_cast<size_t>(i)] * z(i);
    return r;
}

const Vars& st_vars() {
    static const Vars v = make_vars({"s", "t"});
    return v;
}

// Binary form of Q along a parametrization by (s, t).
MPoly restrict_q(const MPoly& Q, const std::array<MPoly, 5>& coords) {
    std::vector<std::optional<MPoly>> img(coords.begin(), coords.end());
    return Q.compose(coords[0].vars(), img);
}

// Line {z0 = 0, z_k = 0, h = 0} in P4 (k = 1 or 2), parametrized linearly by (s, t).
std::array<MPoly, 5> line_param(int k, const std::array<Rational, 5>& h) {
    const Vars& V = st_vars();
    MPoly s = MPoly::variable(V, 0), t = MPoly::variable(V, 1), zero(V);
    const int other = k == 1 ? 2 : 1; // free plane coordinates: z_other, z3, z4
    std::vector<int> free{other, 3, 4};
    // solve h for the last free coordinate with nonzero coefficient
    int solved = -1;
    for (int c : free)
        if (sgn(h[static_cast<size_t>(c)]) != 0) solved = c;
    if (solved < 0) throw DegenerateSpecError("hyperplane contains the plane {z0 = z" + std::to_string(k) + " = 0}");
    std::vector<int> params;
    for (int c : free)
        if (c != solved) params.push_back(c);
    std::array<MPoly, 5> out{zero, zero, zero, zero, zero};
    out[static_cast<size_t>(params[0])] = s;
    out[static_cast<size_t>(params[1])] = t;
    MPoly rest(V);
    for (int c : params) rest += h[static_cast<size_t>(c)] * out[static_cast<size_t>(c)];
    out[static_cast<size_t>(solved)] = (Rational(-1) / h[static_cast<size_t>(solved)]) * rest;
    return out;
}

std::vector<FieldElem> eval_param(const std::array<MPoly, 5>& coords, const FieldElem& x, const FieldElem& y) {
    std::vector<FieldElem> pt;
    for (const auto& c : coords) pt.push_back(to_field(c).eval({x, y}));
    return pt;
}

// Closed points of a binary form's roots pushed through a parametrization.
std::vector<IntersectionPoint> points_of(const MPoly& form, const std::array<MPoly, 5>& coords, bool& multiple) {
    std::vector<IntersectionPoint> out;
    if (form.is_zero()) throw DegenerateSpecError("Q vanishes along an intersection locus; curves share a component");
    for (const auto& r : binary_form_roots(form, 0, 1)) {
        IntersectionPoint p;
        p.point = canonical_projective(eval_param(coords, r.x, r.y));
        p.multiplicity = r.multiplicity;
        if (r.multiplicity > 1) multiple = true;
        bool dup = false;
        for (const auto& q : out) dup = dup || q.point == p.point;
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

PlaneConic plane_conic(const std::array<Rational, 5>& h1, const std::array<Rational, 5>& h2) {
    const Vars& V = st_vars();
    MPoly s = MPoly::variable(V, 0), t = MPoly::variable(V, 1);
    PlaneConic pc;
    pc.vars = V;
    MPoly z0 = s * t, z1 = s * s, z2 = t * t;
    // h_k(z0, z1, z2) + a_k z3 + b_k z4 = 0
    const Rational a1 = h1[3], b1 = h1[4], a2 = h2[3], b2 = h2[4];
    const Rational det = a1 * b2 - a2 * b1;
    if (sgn(det) == 0) throw DegenerateSpecError("plane meets the ridge line (singular z3, z4 block)");
    MPoly r1 = h1[0] * z0 + h1[1] * z1 + h1[2] * z2;
    MPoly r2 = h2[0] * z0 + h2[1] * z1 + h2[2] * z2;
    // [a1 b1; a2 b2] (z3, z4) = -(r1, r2)
    MPoly z3 = (Rational(-1) / det) * (b2 * r1 - b1 * r2);
    MPoly z4 = (Rational(-1) / det) * (a1 * r2 - a2 * r1);
    pc.coords = {z0, z1, z2, z3, z4};
    return pc;
}

std::vector<DoubleCurve> double_curves(const BranchSpec& spec) {
    const Assembly A = assemble(spec);
    const MPoly Q = spec.q_form(), G = scroll::scroll_form(), F = A.F;
    const auto& g = A.genericity;
    if (!g.f_section_cone) throw DegenerateSpecError("{f = 0} contains the ridge line; C5 is not a quartic curve");
    auto prop = [](const std::array<Rational, 5>& a, const std::array<Rational, 5>& b) {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] != a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)]) return false;
        return true;
    };
    if (prop(spec.f, unit(3))) throw DegenerateSpecError("C5 coincides with C3 (f is proportional to z3)");
    if (prop(spec.f, unit(4))) throw DegenerateSpecError("C5 coincides with C4 (f is proportional to z4)");
    if (!g.curves_distinct) throw DegenerateSpecError("a double curve degenerates (Q vanishes on its plane or cone)");

    std::vector<DoubleCurve> out;
    const MPoly minusQ2 = Rational(-1) * Q * Q;
    for (int k : {1, 2}) {
        DoubleCurve c;
        c.index = k;
        c.linear = {z(0), z(k)};
        c.generators = {z(0), z(k), Q};
        c.type = CurveType::Conic;
        IdealBasis I = basis_if_coprime_leads(c.linear);
        c.doubled = reduce_mod(F - minusQ2, I).is_zero();
        // general line {z4 = 2 z_other + 3 z3} of the plane
        std::array<Rational, 5> h{};
        h[static_cast<size_t>(k == 1 ? 2 : 1)] = 2;
        h[3] = 3;
        h[4] = -1;
        MPoly form = restrict_q(Q, line_param(k, h));
        c.degree = form.is_zero() ? 0 : form.total_degree();
        out.push_back(std::move(c));
    }
    const std::array<std::array<Rational, 5>, 3> hs{unit(3), unit(4), spec.f};
    for (int k = 0; k < 3; ++k) {
        DoubleCurve c;
        c.index = 3 + k;
        const auto& h = hs[static_cast<size_t>(k)];
        c.linear = {linear_form(h)};
        c.generators = {linear_form(h), Q, G};
        c.type = CurveType::Quartic;
        IdealBasis I(c.linear, MonomialOrder(), true); // one linear form is a Groebner basis
        c.doubled = reduce_mod(F - minusQ2, I).is_zero();
        // auxiliary hyperplane z3 = z0 + 2 z1 + 3 z2 (or z4 = ... when h has no z4 term)
        std::array<Rational, 5> L{1, 2, 3, 0, 0};
        if (sgn(h[4]) != 0) L[3] = -1;
        else L[4] = -1;
        MPoly form = restrict_q(Q, plane_conic(h, L).coords);
        c.degree = form.is_zero() ? 0 : form.total_degree();
        out.push_back(std::move(c));
    }
    return out;
}

FieldElem eval_at(const MPoly& p, const ClosedPoint& pt) { return to_field(p).eval(pt.coords); }

bool on_curve(const DoubleCurve& c, const ClosedPoint& p) {
    for (const auto& g : c.generators)
        if (!eval_at(g, p).is_zero()) return false;
    return true;
}

int PairIntersection::count() const {
    int n = 0;
    for (const auto& p : points) n += p.geometric();
    return n;
}

std::vector<ClosedPoint> IntersectionReport::all_points() const {
    std::vector<ClosedPoint> out;
    for (const auto& pr : pairs)
        for (const auto& p : pr.points) out.push_back(p.point);
    return out;
}

bool intersection_forms_nonzero(const BranchSpec& spec) {
    const MPoly Q = spec.q_form();
    try {
        MPoly l = Q.subst({{0, MPoly(scroll::projective_vars())}, {1, MPoly(scroll::projective_vars())}, {2, MPoly(scroll::projective_vars())}});
        if (l.is_zero()) return false;
        const std::array<std::array<Rational, 5>, 3> hs{unit(3), unit(4), spec.f};
        for (int k : {1, 2})
            for (const auto& h : hs)
                if (restrict_q(Q, line_param(k, h)).is_zero()) return false;
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k)
                if (restrict_q(Q, plane_conic(hs[static_cast<size_t>(j)], hs[static_cast<size_t>(k)]).coords).is_zero()) return false;
    } catch (const DegenerateSpecError&) {
        return false;
    }
    return true;
}

IntersectionReport curve_intersections(const BranchSpec& spec) {
    const auto curves = double_curves(spec);
    const MPoly Q = spec.q_form();
    IntersectionReport rep;
    // C1 cap C2: the ridge points
    {
        PairIntersection pr{1, 2, {}};
        const auto ridge = scroll::ridge_points(Q);
        rep.multiple_roots = rep.multiple_roots || ridge.double_root;
        for (const auto& r : ridge.points) {
            IntersectionPoint p{scroll::canonical(r.point), r.multiplicity};
            bool dup = false;
            for (const auto& q : pr.points) dup = dup || q.point == p.point;
            if (!dup) pr.points.push_back(std::move(p));
        }
        rep.ridge = pr.count();
        rep.pairs.push_back(std::move(pr));
    }
    const std::array<std::array<Rational, 5>, 3> hs{unit(3), unit(4), spec.f};
    for (int k : {1, 2})
        for (int j = 3; j <= 5; ++j) {
            PairIntersection pr{k, j, {}};
            auto param = line_param(k, hs[static_cast<size_t>(j - 3)]);
            pr.points = points_of(restrict_q(Q, param), param, rep.multiple_roots);
            rep.line += pr.count();
            rep.pairs.push_back(std::move(pr));
        }
    for (int j = 3; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k) {
            PairIntersection pr{j, k, {}};
            auto pc = plane_conic(hs[static_cast<size_t>(j - 3)], hs[static_cast<size_t>(k - 3)]);
            pr.points = points_of(restrict_q(Q, pc.coords), pc.coords, rep.multiple_roots);
            rep.conic += pr.count();
            rep.pairs.push_back(std::move(pr));
        }
    // sanity: every point lies on both named curves
    for (const auto& pr : rep.pairs)
        for (const auto& p : pr.points) {
            if (!on_curve(curves[static_cast<size_t>(pr.i - 1)], p.point) || !on_curve(curves[static_cast<size_t>(pr.j - 1)], p.point))
                throw std::logic_error("intersection point off its curves");
            rep.conjugate_pairs += p.point.conjugate_pairs();
            rep.real_points += p.point.real_points();
        }
    return rep;
}

} // namespace branchdiv::branch

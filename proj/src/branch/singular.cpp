#include "branchdiv/branch/singular.hpp"

#include "branchdiv/exactalg/local_algebra.hpp"
#include "branchdiv/exactalg/solve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace branchdiv::branch {

using scroll::Chart;

std::string to_string(Locus l) {
    switch (l) {
    case Locus::Ridge: return "ridge";
    case Locus::CurvePair: return "curve_pair";
    case Locus::Extra: return "extra";
    }
    return "?";
}

MilnorReport milnor_corank(const LocalGerm& germ) {
    const KPoly& g = germ.series;
    if (g.is_zero() || g.nvars() == 0) throw std::invalid_argument("empty germ");
    if (!g.constant_term().is_zero()) throw std::invalid_argument("germ does not vanish at the origin");
    if (!g.homogeneous_part(1).is_zero()) throw std::invalid_argument("germ has a nonzero linear part (smooth point)");
    const int n = g.nvars();
    MilnorReport r;
    r.corank = n - hessian_rank(g);
    std::vector<KPoly> jac;
    for (int i = 0; i < n; ++i) jac.push_back(g.differentiate(i).truncate(germ.order - 1));
    LocalDimension d = local_dimension(jac, germ.order - 1);
    if (!d.certified) {
        r.classification = "undetermined";
        return r;
    }
    r.mu = d.dimension;
    r.determinacy_k = d.k;
    // corank <= 1: splitting lemma leaves one variable, so the germ is A_mu
    if (*r.mu == 1 && r.corank == 0) r.classification = "A1";
    else if (r.corank <= 1) r.classification = "A" + std::to_string(*r.mu);
    else r.classification = "unclassified";
    return r;
}

namespace {

const Vars& series_vars() {
    static const Vars v = make_vars({"x", "y", "z", "u"});
    return v;
}

const Vars& germ_vars() {
    static const Vars v = make_vars({"y", "z", "u"});
    return v;
}

KPoly rebind(const KPoly& p, const Vars& v) { return KPoly(v, p.terms()); }

// a * b keeping terms of total degree <= n.
KPoly mul_trunc(const KPoly& a, const KPoly& b, int n) {
    std::vector<KPoly::Term> acc;
    for (const auto& [ma, ca] : a.terms()) {
        const int da = static_cast<int>(monomial_degree(ma));
        if (da > n) continue;
        for (const auto& [mb, cb] : b.terms())
            if (da + static_cast<int>(monomial_degree(mb)) <= n) acc.emplace_back(ma + mb, ca * cb);
    }
    return KPoly(a.vars(), std::move(acc));
}

// p with variable i replaced by the series s, truncated at degree n.
KPoly subst_series(const KPoly& p, int i, const KPoly& s, int n) {
    const auto cs = p.coeffs_in(i);
    KPoly out(p.vars()), pw = KPoly::constant(p.vars(), FieldElem(1));
    for (size_t e = 0; e < cs.size(); ++e) {
        if (e > 0) pw = mul_trunc(pw, s, n);
        if (pw.is_zero()) break;
        if (!cs[e].is_zero()) out += mul_trunc(cs[e], pw, n);
    }
    return out;
}

} // namespace

RidgeGerm ridge_germ(const BranchSpec& spec, const ClosedPoint& point, int order) {
    if (order < 4) throw std::invalid_argument("jet order must be at least 4");
    const auto& c = point.coords;
    if (c.size() != 5 || !scroll::on_ridge(c)) throw std::invalid_argument("not a point of the ridge line");
    const MPoly Q = spec.q_form();
    const MPoly Qr = Q.subst({{0, MPoly(scroll::projective_vars())}, {1, MPoly(scroll::projective_vars())}, {2, MPoly(scroll::projective_vars())}});
    if (!to_field(Qr).eval(c).is_zero()) throw std::invalid_argument("Q does not vanish at the point");

    RidgeGerm R;
    R.chart = c[4].is_zero() ? Chart::RidgeZ3 : Chart::RidgeZ4;
    R.v0 = R.chart == Chart::RidgeZ4 ? c[3] / c[4] : c[4] / c[3];
    const std::vector<FieldElem> at{FieldElem(0), FieldElem(0), FieldElem(0), R.v0};

    const MPoly z3z4f = scroll::z(3) * scroll::z(4) * spec.f_form();
    const KPoly Ql = rebind(shift(to_field(scroll::chart_restrict(Q, R.chart)), at), series_vars());
    const KPoly U = rebind(shift(to_field(scroll::chart_restrict(z3z4f, R.chart)), at), series_vars());
    {
        const KPoly Fc = rebind(shift(to_field(scroll::chart_restrict(assemble(spec).F, R.chart)), at), series_vars());
        const KPoly x = KPoly::variable(series_vars(), 0);
        if (Fc != x * U - Ql * Ql) throw std::logic_error("chart equation is not x U - Q^2");
    }
    R.c = Ql.coefficient(monomial_of(3, 1));
    if (R.c.is_zero()) throw DegenerateSpecError("Q is not transversal to the ridge line at the point");
    R.unit0 = U.constant_term();
    if (R.unit0.is_zero()) throw DegenerateSpecError("unit condition fails: the point lies on H3, H4 or {f = 0}");

    const int N = order;
    const KPoly u = KPoly::variable(series_vars(), 3);
    const FieldElem cinv = R.c.inv(), uinv = R.unit0.inv();
    // w as a series in (x, y, z, u) with Ql(x, y, z, w) = u
    KPoly w = cinv * u;
    // each pass fixes one more degree
    for (int k = 1; k <= N; ++k) w = cinv * (u - (subst_series(Ql, 3, w, k) - R.c * w));
    const KPoly Ut = subst_series(U, 3, w, N);
    // x as a series in (y, z, u) with x U(x, y, z, u) = u^2
    const KPoly u2 = u * u;
    const KPoly U0 = KPoly::constant(series_vars(), R.unit0);
    KPoly x = uinv * u2;
    for (int k = 3; k <= N; ++k) x = uinv * (u2 - mul_trunc(x, subst_series(Ut, 0, x, k - 2) - U0, k));
    const KPoly y = KPoly::variable(series_vars(), 1), z = KPoly::variable(series_vars(), 2);
    const KPoly g4 = mul_trunc(x, x, N) - y * z;

    std::vector<KPoly::Term> terms;
    for (const auto& [m, a] : g4.terms()) {
        if (exponent(m, 0) != 0) throw std::logic_error("x survives in the ridge germ");
        terms.emplace_back(make_monomial({exponent(m, 1), exponent(m, 2), exponent(m, 3)}), a);
    }
    R.w_series = w;
    R.x_series = x;
    R.germ.series = KPoly(germ_vars(), terms);
    R.germ.order = N;
    R.germ.provenance = to_string(R.chart) + " at v = " + R.v0.str();
    R.g0 = R.germ.series.coefficient(make_monomial({0, 0, 4}));
    if (R.g0 != uinv * uinv) throw std::logic_error("leading coefficient of the ridge germ");
    return R;
}

int SingularLocus::geometric_count() const {
    int n = 0;
    for (const auto& p : points) n += p.geometric();
    return n;
}

namespace {

struct ChartHit {
    Chart chart;
    std::vector<FieldElem> affine;
};

std::vector<FieldElem> embed_chart(Chart c, const std::vector<FieldElem>& a) {
    return scroll::chart_embed(scroll::ChartPoint{c, a});
}

} // namespace

SingularLocus singular_points(const BranchSpec& spec, const SingularOptions& so) {
    const int order = so.order;
    const Assembly A = assemble(spec);
    SingularLocus out;
    std::vector<std::pair<ClosedPoint, std::vector<ChartHit>>> found;
    std::map<Chart, MPoly> chart_eq;
    for (Chart ch : so.charts) {
        if (ch != Chart::Z1 && ch != Chart::Z2) throw std::invalid_argument("singular points are solved in the z1 and z2 charts");
        const MPoly g = scroll::chart_restrict(A.F, ch);
        chart_eq.emplace(ch, g);
        std::vector<MPoly> sys{g, g.differentiate(0), g.differentiate(1), g.differentiate(2)};
        SolveOptions opts;
        opts.multiplicities = false;
        opts.degree_cap = so.degree_cap;
        SolveResult res;
        try {
            res = solve_zero_dim(sys, opts);
        } catch (const DimensionError& e) {
            throw NonIsolatedError("singular locus of B is not isolated (" + to_string(ch) + " chart): " + e.what());
        }
        for (const auto& r : res.residuals) out.unresolved.push_back({ch, r.factor});
        for (const auto& sp : res.points) {
            const auto& a = sp.point.coords;
            for (const auto& e : sys)
                if (!to_field(e).eval(a).is_zero()) throw std::logic_error("solver returned a non-solution");
            ClosedPoint P = scroll::canonical(embed_chart(ch, a));
            auto it = std::find_if(found.begin(), found.end(), [&](const auto& f) { return f.first == P; });
            if (it == found.end()) found.push_back({P, {{ch, a}}});
            else it->second.push_back({ch, a});
        }
    }

    const auto curves = double_curves(spec);
    const MPoly G = scroll::scroll_form();
    for (const auto& [P, hits] : found) {
        if (!eval_at(A.F, P).is_zero() || !eval_at(G, P).is_zero()) throw std::logic_error("singular point off B");
        SingularPoint sp;
        sp.point = P;
        for (const auto& c : curves)
            if (on_curve(c, P)) sp.curves.push_back(c.index);
        sp.locus = sp.curves.size() == 2 ? Locus::CurvePair : Locus::Extra;
        for (const auto& h : hits) {
            LocalGerm germ{shift(to_field(chart_eq.at(h.chart)), h.affine, order), order, to_string(h.chart)};
            sp.charts.push_back({h.chart, milnor_corank(germ)});
        }
        const MilnorReport& m0 = sp.charts.front().milnor;
        sp.mu = m0.mu;
        sp.corank = m0.corank;
        sp.classification = m0.classification;
        for (const auto& cm : sp.charts)
            sp.chart_consistent = sp.chart_consistent && cm.milnor.mu == m0.mu && cm.milnor.corank == m0.corank;
        out.points.push_back(std::move(sp));
    }

    for (const auto& r : scroll::ridge_points(spec.q_form()).points) {
        ClosedPoint P = scroll::canonical(r.point);
        bool dup = false;
        for (const auto& q : out.points) dup = dup || q.point == P;
        if (dup) continue;
        SingularPoint sp;
        sp.point = P;
        sp.locus = Locus::Ridge;
        for (const auto& c : curves)
            if (on_curve(c, P)) sp.curves.push_back(c.index);
        const RidgeGerm R = ridge_germ(spec, P, order);
        const MilnorReport m = milnor_corank(R.germ);
        sp.charts.push_back({R.chart, m});
        sp.mu = m.mu;
        sp.corank = m.corank;
        sp.classification = m.classification;
        out.points.push_back(std::move(sp));
    }
    std::stable_sort(out.points.begin(), out.points.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (a.locus != b.locus) return static_cast<int>(a.locus) < static_cast<int>(b.locus);
        if (a.curves != b.curves) return a.curves < b.curves;
        return a.point < b.point;
    });
    return out;
}

Census census(const BranchSpec& spec, const std::vector<lattice::ExtraSingularity>& injected, const SingularOptions& opts) {
    Census c;
    c.locus = singular_points(spec, opts);
    for (const auto& p : c.locus.points) {
        const int n = p.geometric();
        if (p.locus == Locus::Ridge) {
            (p.classification == "A3" ? c.a3_ridge : c.other_ridge) += n;
        } else if (p.locus == Locus::CurvePair) {
            (p.classification == "A1" ? c.a1_curve_pairs : c.other_curve_pairs) += n;
        } else {
            if (!p.mu) throw DegenerateSpecError("extra singular point with undetermined Milnor number; raise the jet order");
            for (int i = 0; i < n; ++i) c.extras.push_back({*p.mu, 2});
        }
    }
    if (!c.locus.unresolved.empty()) throw DegenerateSpecError("singular points over fields of degree above the solver cap");
    c.injected = injected;
    std::vector<lattice::ExtraSingularity> all = c.extras;
    all.insert(all.end(), injected.begin(), injected.end());
    c.ledger = lattice::euler_ledger(all);
    c.status = c.ledger.closed() ? "twistor-compatible" : "generic-family";
    return c;
}

} // namespace branchdiv::branch

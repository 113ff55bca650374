#pragma once

#include "branchdiv/branch/curves.hpp"
#include "branchdiv/branch/singular.hpp"

#include <oracle.hpp>

#include <set>

// Pipeline output side by side with the resultant-chain oracle.
namespace oracle::compare {

using namespace branchdiv;


inline const Vars& chart_vars() {
    static const Vars v = make_vars({"s", "t", "u"});
    return v;
}

// (s, 1, s^2, t, u) for k = 1, (s, s^2, 1, t, u) for k = 2.
inline MPoly on_chart(const MPoly& p, int k) {
    const Vars& V = chart_vars();
    const MPoly s = MPoly::variable(V, 0), one = MPoly::constant(V, Rational(1));
    std::vector<std::optional<MPoly>> img{s, k == 1 ? one : s * s, k == 1 ? s * s : one, MPoly::variable(V, 1), MPoly::variable(V, 2)};
    return p.compose(V, img);
}

inline std::vector<FieldElem> embed(const ClosedPoint& a, int k) {
    const auto& c = a.coords;
    if (k == 1) return {c[0], FieldElem(1), c[0] * c[0], c[1], c[2]};
    return {c[0], c[0] * c[0], FieldElem(1), c[1], c[2]};
}

inline std::vector<int> ones(int n) { return std::vector<int>(static_cast<size_t>(n), 1); }

inline std::set<ClosedPoint> ridge_oracle(const branch::BranchSpec& spec) {
    // z0 = z1 = z2 = 0, Q(0,0,0,v,1) = 0; Q(0,0,0,1,0) != 0 for these specs
    auto V = make_vars({"v"});
    const MPoly v = MPoly::variable(V, 0), one = MPoly::constant(V, Rational(1));
    const MPoly q = spec.q[branch::q_index(3, 3)] * v * v + spec.q[branch::q_index(3, 4)] * v + spec.q[branch::q_index(4, 4)] * one;
    std::set<ClosedPoint> out;
    for (const auto& p : oracle::solve({q}, ones(1)))
        out.insert(canonical_projective({FieldElem(0), FieldElem(0), FieldElem(0), p.coords[0], FieldElem(1)}));
    return out;
}

inline std::set<ClosedPoint> pair_oracle(const branch::DoubleCurve& a, const branch::DoubleCurve& b) {
    std::set<ClosedPoint> out;
    for (int k : {1, 2}) {
        std::vector<MPoly> eqs;
        for (const auto* c : {&a, &b})
            for (const auto& g : c->generators) eqs.push_back(on_chart(g, k));
        for (const auto& p : oracle::solve(eqs, ones(3))) out.insert(canonical_projective(embed(p, k)));
    }
    return out;
}

// Per pair: library point set equals the oracle's. Returns the number of mismatching pairs.
inline int intersection_mismatches(const branch::BranchSpec& spec, int* total = nullptr) {
    const auto curves = branch::double_curves(spec);
    const auto rep = branch::curve_intersections(spec);
    int bad = 0, n = 0;
    for (const auto& pr : rep.pairs) {
        std::set<ClosedPoint> lib;
        for (const auto& p : pr.points) lib.insert(p.point);
        const auto orc = (pr.i == 1 && pr.j == 2)
                             ? ridge_oracle(spec)
                             : pair_oracle(curves[static_cast<size_t>(pr.i - 1)], curves[static_cast<size_t>(pr.j - 1)]);
        if (lib != orc) ++bad;
        for (const auto& p : orc) n += p.degree();
    }
    if (total) *total = n;
    return bad;
}

// Chart Jacobian sets of B in charts Z1 and Z2, library versus oracle; plus the ridge pair.
inline int jacobian_mismatches(const branch::BranchSpec& spec) {
    const MPoly F = branch_quartic(spec.f, spec.q, scroll::projective_vars());
    const auto locus = branch::singular_points(spec);
    int bad = 0;
    for (int k : {1, 2}) {
        const MPoly g = on_chart(F, k);
        const auto orc = solve({g, g.differentiate(0), g.differentiate(1), g.differentiate(2)}, ones(3));
        const std::set<ClosedPoint> o(orc.begin(), orc.end());
        std::set<ClosedPoint> lib;
        for (const auto& p : locus.points) {
            const auto& c = p.point.coords;
            const FieldElem& w = c[static_cast<size_t>(k)];
            if (w.is_zero()) continue;
            const FieldElem wi = w.inv();
            lib.insert(canonical_affine({c[0] * wi, c[3] * wi, c[4] * wi}));
        }
        if (lib != o) ++bad;
    }
    std::set<ClosedPoint> ridge;
    for (const auto& p : locus.points)
        if (p.locus == branch::Locus::Ridge) ridge.insert(p.point);
    if (ridge != ridge_oracle(spec)) ++bad;
    return bad;
}

} // namespace oracle::compare

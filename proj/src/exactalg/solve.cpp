#include "branchdiv/exactalg/solve.hpp"

#include "branchdiv/exactalg/factor.hpp"
#include "branchdiv/exactalg/local_algebra.hpp"
#include "branchdiv/exactalg/modp.hpp"
#include "branchdiv/exactalg/nf_poly.hpp"
#include "branchdiv/exactalg/resultant.hpp"

#include <algorithm>

namespace branchdiv {

namespace {

bool involves(const MPoly& p, int v) { return p.degree(v) > 0; }

// Eliminants in x0 from polynomials in (x0, w) only.
void bivariate_eliminants(const std::vector<MPoly>& polys, int w, UPoly<Rational>& G, std::vector<UPoly<Rational>>& seen) {
    std::vector<const MPoly*> with_w;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (!involves(p, w)) {
            UPoly<Rational> u = to_upoly(p, 0);
            seen.push_back(u);
            G = G.is_zero() ? u : gcd_q(G, u);
        } else {
            with_w.push_back(&p);
        }
    }
    std::sort(with_w.begin(), with_w.end(), [&](const MPoly* a, const MPoly* b) { return a->degree(w) < b->degree(w); });
    for (size_t i = 0; i < with_w.size(); ++i)
        for (size_t j = i + 1; j < with_w.size(); ++j) {
            if (!G.is_zero() && G.degree() == 0) return;
            UPoly<Rational> E = resultant_bivariate(*with_w[i], *with_w[j], w, 0);
            if (E.is_zero()) continue;
            seen.push_back(E);
            G = G.is_zero() ? E : gcd_q(G, E);
        }
}

// Level-one resultants eliminating v with the given pivot.
std::vector<MPoly> level_one(const std::vector<MPoly>& sys, size_t pivot, int v) {
    std::vector<MPoly> out;
    for (size_t j = 0; j < sys.size(); ++j) {
        if (j == pivot || sys[j].is_zero()) continue;
        MPoly r = involves(sys[j], v) ? resultant(sys[pivot], sys[j], v) : sys[j];
        if (!r.is_zero()) out.push_back(r);
    }
    return out;
}

std::vector<size_t> pivots_by_degree(const std::vector<MPoly>& sys, int v) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < sys.size(); ++i)
        if (involves(sys[i], v)) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        auto lead_const = [&](size_t i) {
            auto c = sys[i].coeffs_in(v);
            return c.back().is_constant();
        };
        if (lead_const(a) != lead_const(b)) return lead_const(a);
        if (sys[a].degree(v) != sys[b].degree(v)) return sys[a].degree(v) < sys[b].degree(v);
        return sys[a].size() < sys[b].size();
    });
    return idx;
}

std::string describe(const std::vector<MPoly>& polys) {
    std::string s;
    for (const auto& p : polys) {
        std::string t = p.str();
        if (t.size() > 160) t = t.substr(0, 160) + "...";
        s += "\n  " + t;
    }
    return s;
}

// --- rigorous refutation modulo p -------------------------------------------

bool p_integral(const MPoly& f, modp::u64 p) {
    for (const auto& [m, c] : f.terms())
        if (modp::reduce(c.get_den(), p) == 0) return false;
    return true;
}

// Polynomials in (x0, x1); shows that at every root of phi they have no common zero in x1.
bool refute_modp(const UPoly<Rational>& phi, const std::vector<MPoly>& fiber, int x1) {
    int tried = 0;
    for (size_t idx = 0; idx < 400 && tried < 6; ++idx) {
        const modp::u64 p = modp::nth_prime(idx);
        bool ok = true;
        for (const auto& c : phi.c)
            if (modp::reduce(c.get_den(), p) == 0) ok = false;
        for (const auto& f : fiber)
            if (!p_integral(f, p)) ok = false;
        if (!ok) continue;
        modp::Poly fp = modp::monic(modp::from_rational(phi, p), p);
        if (fp.degree() != phi.degree()) continue;
        if (modp::gcd(fp, modp::derivative(fp, p), p).degree() > 0) continue;
        std::vector<modp::u64> roots;
        for (const auto& fac : modp::factor_squarefree(fp, p))
            if (fac.degree() == 1) roots.push_back((p - fac.c[0]) % p);
        if (roots.empty()) continue;
        ++tried;
        const modp::u64 r = roots.front();
        modp::Poly g;
        bool have_unit_lead = false;
        for (const auto& f : fiber) {
            auto cs = f.coeffs_in(x1);
            modp::Poly sp;
            sp.c.resize(cs.size());
            for (size_t i = 0; i < cs.size(); ++i) {
                UPoly<Rational> ci = to_upoly(cs[i], 0);
                modp::Poly cp = modp::from_rational(ci, p);
                sp.c[i] = modp::eval(cp, r, p);
            }
            sp.trim();
            if (!cs.empty() && sp.degree() == static_cast<int>(cs.size()) - 1 && sp.degree() >= 0) have_unit_lead = true;
            g = g.is_zero() ? sp : modp::gcd(g, sp, p);
        }
        if (have_unit_lead && !g.is_zero() && g.degree() == 0) return true;
    }
    return false;
}

// --- exact fibers over number fields -----------------------------------------

KUPoly specialize_univariate(const MPoly& f, int keep, const std::vector<std::pair<int, FieldElem>>& values) {
    // f in variables; substitute the given values; result univariate in `keep`.
    std::vector<FieldElem> coeffs(static_cast<size_t>(std::max(f.degree(keep), 0) + 1), FieldElem(0));
    for (const auto& [m, c] : f.terms()) {
        FieldElem term(c);
        for (const auto& [v, val] : values) {
            unsigned e = exponent(m, v);
            for (unsigned k = 0; k < e; ++k) term = term * val;
        }
        coeffs[exponent(m, keep)] = coeffs[exponent(m, keep)] + term;
    }
    return KUPoly(std::move(coeffs));
}

KUPoly fiber_gcd(const std::vector<MPoly>& polys, int keep, const std::vector<std::pair<int, FieldElem>>& values, bool& all_zero) {
    KUPoly g;
    all_zero = true;
    for (const auto& f : polys) {
        KUPoly s = specialize_univariate(f, keep, values);
        if (s.is_zero()) continue;
        all_zero = false;
        g = g.is_zero() ? s.monic() : gcd(g, s);
        if (g.degree() == 0) break;
    }
    return g;
}

// Res_{x_v}(a, b) with x0 = alpha substituted, as a polynomial in x_keep over K,
// by evaluation at integers and interpolation.
KUPoly resultant_over(const MPoly& a, const MPoly& b, int v, int keep, const FieldElem& alpha) {
    const int m = a.degree(v), n = b.degree(v);
    const int bound = n * std::max(a.degree(keep), 0) + m * std::max(b.degree(keep), 0);
    std::vector<FieldElem> xs, ys;
    for (int x = 0; static_cast<int>(xs.size()) <= bound; ++x) {
        std::vector<std::pair<int, FieldElem>> vals{{0, alpha}, {keep, FieldElem(x)}};
        KUPoly A = specialize_univariate(a, v, vals), B = specialize_univariate(b, v, vals);
        FieldElem r;
        if (A.degree() < m && B.degree() < n) r = FieldElem(0);
        else if (A.is_zero() || B.is_zero()) r = FieldElem(0);
        else {
            r = resultant(A, B);
            if (A.degree() < m) {
                for (int k = 0; k < m - A.degree(); ++k) r = r * B.lead();
                if ((n * (m - A.degree())) % 2 == 1) r = -r;
            } else if (B.degree() < n) {
                for (int k = 0; k < n - B.degree(); ++k) r = r * A.lead();
            }
        }
        xs.emplace_back(x);
        ys.push_back(r);
    }
    // Lagrange interpolation over K
    KUPoly res;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (ys[i].is_zero()) continue;
        KUPoly basis = KUPoly::constant(FieldElem(1));
        FieldElem den(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * KUPoly{-xs[j], FieldElem(1)};
            den = den * (xs[i] - xs[j]);
        }
        res += (ys[i] / den) * basis;
    }
    return res;
}

struct Partial {
    FieldPtr field;
    std::vector<FieldElem> coords;
};

} // namespace

Multiplicity point_multiplicity(const std::vector<MPoly>& system, const std::vector<FieldElem>& point, int max_order) {
    Multiplicity out;
    int maxdeg = 0;
    for (const auto& f : system) maxdeg = std::max(maxdeg, f.total_degree());
    for (int T = 2; T <= max_order + 1; ++T) {
        std::vector<KPoly> gens;
        for (const auto& f : system) gens.push_back(shift(to_field(f), point, std::min(T, maxdeg)));
        LocalDimension d = local_dimension(gens, T);
        if (d.certified) {
            out.value = d.dimension;
            out.certified = true;
            return out;
        }
    }
    return out;
}

SolveResult solve_zero_dim(const std::vector<MPoly>& system0, const SolveOptions& opts) {
    std::vector<MPoly> system;
    for (const auto& f : system0)
        if (!f.is_zero()) system.push_back(f);
    SolveResult result;
    if (system.empty()) throw DimensionError("empty system: the solution set is the whole space");
    const int n = system.front().nvars();
    if (n < 1 || n > 3) throw std::invalid_argument("solve_zero_dim supports 1 to 3 variables");
    for (const auto& f : system)
        if (f.is_constant()) return result; // nonzero constant: no solutions

    // 1. univariate eliminant in x0
    UPoly<Rational> G;
    std::vector<UPoly<Rational>> seen;
    std::vector<MPoly> fiber1; // polynomials in (x0, x1) vanishing on every solution
    std::vector<MPoly> offending;
    if (n == 1) {
        for (const auto& f : system) {
            UPoly<Rational> u = to_upoly(f, 0);
            G = G.is_zero() ? u : gcd_q(G, u);
        }
    } else if (n == 2) {
        fiber1 = system;
        bivariate_eliminants(system, 1, G, seen);
        if (G.is_zero()) {
            for (const auto& f : system)
                if (!involves(f, 1) || !involves(f, 0)) offending.push_back(f);
            throw DimensionError("positive-dimensional solution set: every eliminant vanishes" + describe(system));
        }
    } else {
        for (int order = 0; order < 2 && (G.is_zero() || order == 0); ++order) {
            const int v = order == 0 ? 2 : 1, w = 3 - v;
            auto piv = pivots_by_degree(system, v);
            std::vector<MPoly> rows;
            for (const auto& f : system)
                if (!involves(f, v)) rows.push_back(f);
            size_t used = 0;
            for (size_t pi : piv) {
                std::vector<MPoly> R = level_one(system, pi, v);
                for (const auto& f : rows) R.push_back(f);
                bivariate_eliminants(R, w, G, seen);
                ++used;
                if (!G.is_zero() && used >= 1) break;
            }
            if (piv.empty()) bivariate_eliminants(rows, w, G, seen);
        }
        if (G.is_zero()) {
            throw DimensionError("positive-dimensional solution set: all resultant eliminants vanish" + describe(system));
        }
        // every pairwise resultant in x2 vanishes on the projection to (x0, x1)
        for (size_t i = 0; i < system.size(); ++i) {
            if (!involves(system[i], 2)) {
                fiber1.push_back(system[i]);
                continue;
            }
            for (size_t j = i + 1; j < system.size(); ++j) {
                if (!involves(system[j], 2)) continue;
                MPoly r = resultant(system[i], system[j], 2);
                if (!r.is_zero()) fiber1.push_back(r);
            }
        }
    }
    if (G.degree() == 0) return result;
    G = squarefree_part(G);
    result.eliminant = G;

    // 2. split over Q and resolve each factor
    std::vector<Partial> partials;
    for (const auto& [phi, mult] : factor_q(G)) {
        (void)mult;
        if (n >= 2 && refute_modp(phi, fiber1, 1)) {
            result.refuted.push_back(phi);
            continue;
        }
        const int d = phi.degree();
        if (d > opts.degree_cap) {
            result.residuals.push_back({phi, d});
            continue;
        }
        FieldPtr K = d == 1 ? nullptr : make_field_auto_conjugation(phi);
        FieldElem alpha = d == 1 ? FieldElem(-phi.c[0]) : FieldElem::generator(K);
        if (n == 1) {
            partials.push_back({K, {alpha}});
            continue;
        }
        // x1 fiber
        bool all_zero = false;
        KUPoly H1 = fiber_gcd(fiber1, 1, {{0, alpha}}, all_zero);
        if (all_zero) {
            // fall back to resultants over K computed from the original equations
            std::vector<MPoly> polys;
            if (n == 2) polys = system;
            KUPoly acc;
            if (n == 3) {
                for (size_t i = 0; i < system.size(); ++i)
                    for (size_t j = i + 1; j < system.size(); ++j) {
                        KUPoly r = resultant_over(system[i], system[j], 2, 1, alpha);
                        if (!r.is_zero()) acc = acc.is_zero() ? r.monic() : gcd(acc, r);
                    }
            }
            if (acc.is_zero()) throw DimensionError("positive-dimensional fiber over an eliminant root " + to_string(phi) + describe(system));
            H1 = acc;
        }
        if (H1.degree() < 1) {
            result.refuted.push_back(phi);
            continue;
        }
        for (const auto& [h1, m1] : factor_over(H1, K)) {
            (void)m1;
            const int e1 = h1.degree();
            if (d * e1 > opts.degree_cap) {
                result.residuals.push_back({phi, d * e1});
                continue;
            }
            Extension L1 = adjoin_root(K, h1);
            FieldElem x0 = K ? embed(alpha, L1.alpha) : alpha;
            FieldElem x1 = L1.beta;
            if (n == 2) {
                partials.push_back({L1.field, {x0, x1}});
                continue;
            }
            bool z2 = false;
            KUPoly H2 = fiber_gcd(system, 2, {{0, x0}, {1, x1}}, z2);
            if (z2) throw DimensionError("positive-dimensional fiber: a line of solutions over an eliminant root" + describe(system));
            if (H2.degree() < 1) continue; // spurious x1 value
            for (const auto& [h2, m2] : factor_over(H2, L1.field)) {
                (void)m2;
                const int e2 = h2.degree();
                if (d * e1 * e2 > opts.degree_cap) {
                    result.residuals.push_back({phi, d * e1 * e2});
                    continue;
                }
                Extension L2 = adjoin_root(L1.field, h2);
                FieldElem y0 = L1.field ? embed(x0, L2.alpha) : x0;
                FieldElem y1 = L1.field ? embed(x1, L2.alpha) : x1;
                partials.push_back({L2.field, {y0, y1, L2.beta}});
            }
        }
    }

    // 3. verify, canonicalize, multiplicities
    for (const auto& pt : partials) {
        for (const auto& f : system) {
            FieldElem v = to_field(f).eval(pt.coords);
            if (!v.is_zero()) throw std::logic_error("solve_zero_dim: reconstructed point does not satisfy the system");
        }
        SolvedPoint sp;
        sp.point = canonical_affine(pt.coords);
        if (opts.multiplicities) {
            Multiplicity m = point_multiplicity(system, pt.coords, opts.multiplicity_order);
            sp.multiplicity = m.value;
            sp.multiplicity_certified = m.certified;
        }
        result.points.push_back(std::move(sp));
    }
    std::sort(result.points.begin(), result.points.end(), [](const SolvedPoint& a, const SolvedPoint& b) { return a.point < b.point; });
    return result;
}

} // namespace branchdiv

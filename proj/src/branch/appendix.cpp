#include "branchdiv/branch/appendix.hpp"

#include "branchdiv/exactalg/binary_form.hpp"
#include "branchdiv/exactalg/linalg.hpp"
#include "branchdiv/exactalg/local_algebra.hpp"
#include "branchdiv/exactalg/solve.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace branchdiv::branch {

namespace {

const Vars& w_vars() {
    static const Vars v = make_vars({"x", "y", "z", "u", "w"});
    return v;
}

const Vars& p2_vars() {
    static const Vars v = make_vars({"X", "Y", "Z"});
    return v;
}

MPoly var(const Vars& v, int i) { return MPoly::variable(v, i); }

std::vector<MPoly> w_equations() {
    const Vars& V = w_vars();
    MPoly x = var(V, 0), y = var(V, 1), z = var(V, 2), u = var(V, 3), w = var(V, 4);
    return {x * x - y * z, w * w - u * u + x};
}

struct Elim {
    int var;
    MPoly value;
};

// Repeatedly solves an equation c v + p = 0 (c a nonzero constant, p free of v)
// for v and substitutes. Zero equations are dropped.
void linear_eliminate(std::vector<MPoly>& eqs, std::vector<Elim>& done) {
    bool again = true;
    while (again) {
        again = false;
        for (size_t k = 0; k < eqs.size() && !again; ++k) {
            const MPoly& e = eqs[k];
            for (int i = 0; i < e.nvars() && !again; ++i) {
                if (e.degree(i) != 1) continue;
                auto cs = e.coeffs_in(i);
                if (!cs[1].is_constant()) continue;
                const Rational c = cs[1].constant_term();
                MPoly value = (Rational(-1) / c) * cs[0];
                for (auto& q : eqs) q = q.subst({{i, value}});
                done.push_back({i, value});
                again = true;
            }
        }
        std::vector<MPoly> kept;
        for (auto& q : eqs)
            if (!q.is_zero()) kept.push_back(q);
        eqs = std::move(kept);
    }
}

bool inconsistent(const std::vector<MPoly>& eqs) {
    for (const auto& e : eqs)
        if (e.is_constant() && !e.is_zero()) return true;
    return false;
}

std::vector<int> free_vars(int n, const std::vector<Elim>& done) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        bool gone = false;
        for (const auto& d : done) gone = gone || d.var == i;
        if (!gone) out.push_back(i);
    }
    return out;
}

// Same polynomial in the ring of the listed variables only.
template <class K>
Polynomial<K> restrict_ring(const Polynomial<K>& p, const std::vector<int>& keep) {
    std::vector<std::string> names;
    for (int i : keep) names.push_back((*p.vars())[static_cast<size_t>(i)]);
    Vars V = make_vars(names);
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e;
        unsigned used = 0;
        for (int i : keep) {
            e.push_back(exponent(m, i));
            used += exponent(m, i);
        }
        if (used != monomial_degree(m)) throw std::logic_error("polynomial uses a dropped variable");
        terms.emplace_back(make_monomial(e), c);
    }
    return Polynomial<K>(V, terms);
}

// Full coordinates from values of the free variables.
std::vector<FieldElem> back_substitute(int n, const std::vector<int>& freev, const std::vector<FieldElem>& vals, const std::vector<Elim>& done) {
    std::vector<FieldElem> pt(static_cast<size_t>(n), FieldElem(0));
    for (size_t i = 0; i < freev.size(); ++i) pt[static_cast<size_t>(freev[i])] = vals[i];
    for (auto it = done.rbegin(); it != done.rend(); ++it) pt[static_cast<size_t>(it->var)] = to_field(it->value).eval(pt);
    return pt;
}

// Isolated solutions of eqs (already linearly reduced) in the free variables.
std::vector<std::vector<FieldElem>> isolated_solutions(int n, const std::vector<MPoly>& eqs, const std::vector<Elim>& done) {
    if (inconsistent(eqs)) return {};
    const auto fv = free_vars(n, done);
    if (fv.empty()) {
        if (!eqs.empty()) throw std::logic_error("residual equations without free variables");
        return {back_substitute(n, fv, {}, done)};
    }
    if (eqs.empty()) throw DimensionError("positive-dimensional singular locus in a blowup chart");
    std::vector<MPoly> sub;
    for (const auto& e : eqs) sub.push_back(restrict_ring(e, fv));
    std::vector<std::vector<FieldElem>> out;
    for (const auto& sp : solve_zero_dim(sub).points) out.push_back(back_substitute(n, fv, sp.point.coords, done));
    return out;
}

MPoly strict_part(const MPoly& p, int e) {
    if (p.is_zero()) return p;
    unsigned m = 255;
    for (const auto& t : p.terms()) m = std::min(m, exponent(t.first, e));
    std::vector<MPoly::Term> terms;
    for (const auto& [mono, c] : p.terms()) terms.emplace_back(mono - monomial_of(e, m), c);
    return MPoly(p.vars(), terms);
}

Vars chart_vars_of(int k) {
    std::vector<std::string> names{"x1", "y1", "z1", "u", "w"};
    names[static_cast<size_t>(k)] = std::string(1, "xyz"[k]);
    return make_vars(names);
}

// Pullback of a polynomial on C^5 to blowup chart k, divided by the exceptional power.
MPoly pull(const MPoly& p, int k, const Vars& V) {
    std::vector<std::optional<MPoly>> img(5);
    const MPoly e = var(V, k);
    for (int j = 0; j < 5; ++j) img[static_cast<size_t>(j)] = (j < 3 && j != k) ? e * var(V, j) : var(V, j);
    return strict_part(p.compose(V, img), k);
}

std::vector<FieldElem> chart_to_base(int k, const std::vector<FieldElem>& c) {
    std::vector<FieldElem> b = c;
    for (int j = 0; j < 3; ++j)
        if (j != k) b[static_cast<size_t>(j)] = c[static_cast<size_t>(k)] * c[static_cast<size_t>(j)];
    return b;
}

std::vector<FieldElem> chart_direction(int k, const std::vector<FieldElem>& c) {
    std::vector<FieldElem> d{c[0], c[1], c[2]};
    d[static_cast<size_t>(k)] = FieldElem(1);
    return d;
}

// Homogenizes a polynomial in the two direction coordinates of chart k.
MPoly homogenize(const MPoly& p, int k) {
    const int d = p.total_degree();
    std::vector<MPoly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(3, 0);
        for (int j = 0; j < 3; ++j)
            if (j != k) e[static_cast<size_t>(j)] = exponent(m, j);
        e[static_cast<size_t>(k)] = static_cast<unsigned>(d) - monomial_degree(m);
        terms.emplace_back(make_monomial(e), c);
    }
    MPoly h(p2_vars(), terms);
    return (Rational(1) / h.lead().second) * h;
}

bool linear_system_solvable(const std::vector<MPoly>& eqs) {
    if (inconsistent(eqs)) return false;
    const int n = eqs.empty() ? 0 : eqs.front().nvars();
    Matrix<Rational> A(0, 0), Ab(0, 0);
    for (const auto& e : eqs) {
        if (e.total_degree() > 1) throw std::logic_error("plane transform is not linear in the chart");
        std::vector<Rational> row, rowb;
        for (int i = 0; i < n; ++i) row.push_back(e.coefficient(monomial_of(i, 1)));
        rowb = row;
        rowb.push_back(e.constant_term());
        A.append_row(row);
        Ab.append_row(rowb);
    }
    if (eqs.empty()) return true;
    return rank(A) == rank(Ab);
}

} // namespace

bool AppendixReport::separation_ok() const { return !meet[0][1] && !meet[2][3]; }

bool AppendixReport::passed() const {
    if (sing_w_lines.size() != 2 || !sing_w_isolated_part_empty) return false;
    if (singular.size() != 2) return false;
    for (const auto& p : singular)
        if (!p.milnor.mu || *p.milnor.mu != 1 || p.milnor.corank != 0 || p.hessian_rank != 4) return false;
    if (!fiber_smooth || !fiber_rational || exceptional_components != 2) return false;
    for (int c : contains_line)
        if (c < 0) return false;
    return contains_line[0] == contains_line[1] && contains_line[2] == contains_line[3] && contains_line[0] != contains_line[2] && separation_ok();
}

AppendixReport appendix_blowup_check(int order) {
    AppendixReport rep;
    const Vars& V = w_vars();
    const auto W = w_equations();

    // Sing W: reduce to a hypersurface, then its Jacobian scheme is a union of lines in (u, w)
    {
        std::vector<MPoly> eqs = W;
        std::vector<Elim> done;
        linear_eliminate(eqs, done);
        if (eqs.size() != 1) throw std::logic_error("W does not reduce to a hypersurface");
        std::vector<MPoly> sing{eqs[0]};
        for (int i = 0; i < 5; ++i) sing.push_back(eqs[0].differentiate(i));
        linear_eliminate(sing, done);
        const auto fv = free_vars(5, done);
        if (fv != std::vector<int>{3, 4}) throw std::logic_error("unexpected free variables for Sing W");
        std::vector<ClosedPoint> common;
        bool first = true;
        for (const auto& e : sing) {
            if (!e.is_homogeneous()) throw std::logic_error("Sing W equations are not binary forms");
            std::vector<ClosedPoint> roots;
            for (const auto& r : binary_form_roots(e, 3, 4)) roots.push_back(canonical_projective({r.x, r.y}));
            if (first) common = roots;
            else {
                std::vector<ClosedPoint> keep;
                for (const auto& p : common)
                    for (const auto& q : roots)
                        if (p == q) keep.push_back(p);
                common = keep;
            }
            first = false;
        }
        std::sort(common.begin(), common.end());
        common.erase(std::unique(common.begin(), common.end()), common.end());
        for (auto& r : common) {
            auto a = back_substitute(5, fv, r.coords, done);
            auto b = back_substitute(5, fv, {FieldElem(2) * r.coords[0], FieldElem(2) * r.coords[1]}, done);
            for (size_t i = 0; i < 5; ++i)
                if (b[i] != FieldElem(2) * a[i]) throw std::logic_error("singular curve is not a line");
            r = canonical_projective(a);
        }
        std::sort(common.begin(), common.end());
        rep.sing_w_lines = common;
        // binary forms in (u, w): outside their common linear factors only the origin remains
        rep.sing_w_isolated_part_empty = true;
        for (const auto& L : common)
            for (const auto& e : W)
                if (!to_field(e).eval(L.coords).is_zero()) rep.sing_w_isolated_part_empty = false;
    }

    // blowup charts
    std::vector<ClosedPoint> seen;
    std::optional<MPoly> conic;
    bool conic_ok = true;
    for (int k = 0; k < 3; ++k) {
        BlowupChart ch;
        ch.name = std::string(1, "xyz"[k]);
        ch.vars = chart_vars_of(k);
        for (const auto& g : W) ch.strict.push_back(pull(g, k, ch.vars));

        std::vector<MPoly> eqs = ch.strict;
        std::vector<Elim> done;
        linear_eliminate(eqs, done);
        if (eqs.size() != 1) throw std::logic_error("strict transform does not reduce to a hypersurface");
        const MPoly h = eqs[0];
        const auto hvars = free_vars(5, done);
        std::vector<MPoly> sing{h};
        for (int i = 0; i < 5; ++i) sing.push_back(h.differentiate(i));
        std::vector<Elim> done2 = done;
        linear_eliminate(sing, done2);
        const auto pts = isolated_solutions(5, sing, done2);
        ch.smooth = pts.empty();
        for (const auto& p : pts) {
            for (const auto& g : ch.strict)
                if (!to_field(g).eval(p).is_zero()) throw std::logic_error("singular point off the strict transform");
            BlowupSingularPoint sp;
            sp.chart = ch.name;
            sp.affine = canonical_affine(p);
            sp.base = canonical_affine(chart_to_base(k, p));
            sp.direction = canonical_projective(chart_direction(k, p));
            std::vector<FieldElem> key = sp.base.coords;
            for (const auto& d : sp.direction.coords) key.push_back(d);
            ClosedPoint kp = canonical_affine(key);
            bool dup = false;
            for (const auto& q : seen) dup = dup || q == kp;
            if (dup) continue;
            seen.push_back(kp);
            std::vector<FieldElem> at;
            for (int i : hvars) at.push_back(p[static_cast<size_t>(i)]);
            KPoly germ = shift(restrict_ring(to_field(h), hvars), at, order);
            sp.milnor = milnor_corank({germ, order, "blowup chart " + ch.name});
            sp.hessian_rank = hessian_rank(germ);
            rep.singular.push_back(std::move(sp));
        }

        // fiber over the origin: exceptional coordinate and u, w set to zero
        const MPoly zero(ch.vars);
        std::vector<MPoly> fib;
        for (const auto& g : ch.strict) {
            MPoly r = g.subst({{k, zero}, {3, zero}, {4, zero}});
            if (!r.is_zero()) fib.push_back(r);
        }
        if (fib.size() != 1) conic_ok = false;
        else {
            MPoly hc = homogenize(fib[0], k);
            if (!conic) conic = hc;
            else if (*conic != hc) conic_ok = false;
        }

        if (k == 1) {
            MPoly e = h.subst({{1, zero}});
            for (int i = 0; i < 3; ++i)
                if (e.degree(i) > 0) throw std::logic_error("exceptional restriction depends on the direction");
            rep.exceptional_components = static_cast<int>(binary_form_roots(e, 3, 4).size());
        }
        rep.charts.push_back(std::move(ch));
    }

    if (conic && conic_ok && conic->total_degree() == 2) {
        rep.fiber_conic = *conic;
        Matrix<Rational> M(3, 3);
        for (const auto& [m, c] : conic->terms()) {
            int a = -1, b = -1;
            for (int i = 0; i < 3; ++i) {
                unsigned e = exponent(m, i);
                if (e == 2) a = b = i;
                else if (e == 1) (a < 0 ? a : b) = i;
            }
            if (a == b) M(static_cast<size_t>(a), static_cast<size_t>(a)) = 2 * c;
            else {
                M(static_cast<size_t>(a), static_cast<size_t>(b)) = c;
                M(static_cast<size_t>(b), static_cast<size_t>(a)) = c;
            }
        }
        rep.fiber_smooth = rank(M) == 3;
        for (int i = 0; i < 3 && rep.fiber_smooth; ++i) {
            std::vector<Rational> pt(3, Rational(0));
            pt[static_cast<size_t>(i)] = 1;
            if (sgn(conic->eval(pt)) == 0) rep.fiber_rational = true;
        }
    }

    // the four planes
    const MPoly x = var(V, 0), y = var(V, 1), z = var(V, 2), u = var(V, 3), w = var(V, 4);
    const std::array<std::vector<MPoly>, 4> planes{{{x, y, w - u}, {x, z, w - u}, {x, y, w + u}, {x, z, w + u}}};
    rep.planes = {"{x=y=w-u=0}", "{x=z=w-u=0}", "{x=y=w+u=0}", "{x=z=w+u=0}"};
    for (size_t i = 0; i < 4; ++i) {
        rep.contains_line[i] = -1;
        for (size_t L = 0; L < rep.sing_w_lines.size(); ++L) {
            bool in = true;
            for (const auto& g : planes[i]) in = in && to_field(g).eval(rep.sing_w_lines[L].coords).is_zero();
            if (in) rep.contains_line[i] = static_cast<int>(L);
        }
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            std::vector<MPoly> both = planes[i];
            both.insert(both.end(), planes[j].begin(), planes[j].end());
            rep.meet_before[i][j] = linear_system_solvable(both);
            bool m = false;
            for (int k = 0; k < 3 && !m; ++k) {
                std::vector<MPoly> eqs;
                for (const auto& g : both) eqs.push_back(pull(g, k, rep.charts[static_cast<size_t>(k)].vars));
                m = linear_system_solvable(eqs);
            }
            rep.meet[i][j] = m;
        }
    return rep;
}

} // namespace branchdiv::branch

#include "oracle.hpp"

#include "branchdiv/exactalg/factor.hpp"
#include "branchdiv/exactalg/linalg.hpp"
#include "branchdiv/exactalg/nf_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

using branchdiv::Integer;
using ZMat = std::vector<std::vector<Integer>>;

Integer bareiss_int(ZMat m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    Integer t;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

using ZPoly = std::vector<Integer>; // c[i] coefficient of y^i

Integer zsylvester(const ZPoly& a, int m, const ZPoly& b, int n) {
    if (m == 0 && n == 0) return 1;
    auto co = [](const ZPoly& p, int i) { return i < static_cast<int>(p.size()) ? p[static_cast<size_t>(i)] : Integer(0); };
    const size_t N = static_cast<size_t>(m + n);
    ZMat M(N, std::vector<Integer>(N, Integer(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[static_cast<size_t>(r)][static_cast<size_t>(r + m - i)] = co(a, i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + n - i)] = co(b, i);
    return bareiss_int(std::move(M));
}

} // namespace

Rational bareiss_det(std::vector<std::vector<Rational>> m) {
    Rational scale = 1;
    ZMat z(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        Integer l = 1;
        for (auto& x : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (auto& x : m[r]) z[r].push_back(Integer(x * l));
        scale *= l;
    }
    return Rational(bareiss_int(std::move(z))) / scale;
}

Rational sylvester(const Q& a, int m, const Q& b, int n) {
    if (m == 0 && n == 0) return 1;
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[static_cast<size_t>(r)][static_cast<size_t>(r + m - i)] = a.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + n - i)] = b.coeff(i);
    return bareiss_det(std::move(M));
}

Q lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences
    const size_t n = xs.size();
    std::vector<Rational> c = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Q r;
    for (size_t k = n; k-- > 0;) r = r * Q{-xs[k], Rational(1)} + Q::constant(c[k]);
    return r;
}

int weighted_degree(const MPoly& p, const std::vector<int>& w) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) {
        int s = 0;
        for (int i = 0; i < p.nvars(); ++i) s += static_cast<int>(branchdiv::exponent(m, i)) * w[static_cast<size_t>(i)];
        d = std::max(d, s);
    }
    return d;
}

namespace {

// Integer-coefficient p with some variables fixed, as a univariate polynomial in v.
ZPoly specialize(const MPoly& p, int v, const std::vector<std::pair<int, Integer>>& vals) {
    ZPoly c(static_cast<size_t>(std::max(p.degree(v), 0) + 1), Integer(0));
    Integer t;
    for (const auto& [m, a] : p.terms()) {
        t = a.get_num();
        for (const auto& [i, x] : vals) {
            unsigned e = branchdiv::exponent(m, i);
            for (unsigned k = 0; k < e; ++k) t *= x;
        }
        c[branchdiv::exponent(m, v)] += t;
    }
    return c;
}

MPoly integral(const MPoly& p) {
    Integer l = 1;
    for (const auto& [m, a] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    return Rational(l) * p;
}

// evaluation points 0, 1, -1, 2, -2, ...
Integer point(int i) { return (i % 2 == 1) ? Integer((i + 1) / 2) : Integer(-(i / 2)); }

// weighted degree bound for Res_v(a, b) with formal degrees m, n
int res_bound(int wa, int m, int wb, int n, int wv) { return n * wa + m * wb - m * n * wv; }

Q gcd_or(const Q& g, const Q& e) {
    if (e.is_zero()) return g;
    if (g.is_zero()) return e.monic();
    return branchdiv::gcd_q(g, e);
}

Q interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    std::vector<Rational> X(xs.begin(), xs.end()), Y(ys.begin(), ys.end());
    return lagrange(X, Y);
}

ZPoly interpolate_z(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    Q q = interpolate(xs, ys);
    ZPoly out;
    for (const auto& c : q.c) {
        if (c.get_den() != 1) throw std::logic_error("oracle: non-integral interpolant");
        out.push_back(c.get_num());
    }
    return out;
}

int zdeg(const ZPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

Q chain2(const MPoly& a0, const MPoly& b0, int keep, int y, const std::vector<int>& w) {
    const MPoly a = integral(a0), b = integral(b0);
    const int m = a.degree(y), n = b.degree(y);
    if (m <= 0 && n <= 0) return {};
    if (m <= 0 || n <= 0) {
        const MPoly& free = m <= 0 ? a : b;
        try {
            return branchdiv::to_upoly(free, keep);
        } catch (...) {
            return {};
        }
    }
    const int W = res_bound(weighted_degree(a, w), m, weighted_degree(b, w), n, w[static_cast<size_t>(y)]);
    const int D = W / w[static_cast<size_t>(keep)];
    std::vector<Integer> xs, ys;
    for (int i = 0; i <= D; ++i) {
        Integer X = point(i);
        xs.push_back(X);
        ys.push_back(zsylvester(specialize(a, y, {{keep, X}}), m, specialize(b, y, {{keep, X}}), n));
    }
    return interpolate(xs, ys);
}

Q chain3(const MPoly& p0, const MPoly& a0, const MPoly& b0, int keep, int y, int z, const std::vector<int>& w) {
    const MPoly p = integral(p0), a = integral(a0), b = integral(b0);
    const int mp = p.degree(z), ma = a.degree(z), mb = b.degree(z);
    if (mp <= 0 || ma <= 0 || mb <= 0) return {};
    const int wp = weighted_degree(p, w), wa = weighted_degree(a, w), wb = weighted_degree(b, w);
    const int wz = w[static_cast<size_t>(z)], wy = w[static_cast<size_t>(y)], wk = w[static_cast<size_t>(keep)];
    const int WA = res_bound(wp, mp, wa, ma, wz), WB = res_bound(wp, mp, wb, mb, wz);
    const int dyA = std::min(WA / wy, mp * a.degree(y) + ma * p.degree(y));
    const int dyB = std::min(WB / wy, mp * b.degree(y) + mb * p.degree(y));
    // outer bound uses the y-degree bounds as formal degrees
    const int W = res_bound(WA, dyA, WB, dyB, wy);
    const int D = W / wk;
    auto inner = [&](const MPoly& q, int mq, int dy, const Integer& X) {
        std::vector<Integer> ts, vs;
        for (int i = 0; i <= dy; ++i) {
            Integer T = point(i);
            ts.push_back(T);
            vs.push_back(zsylvester(specialize(p, z, {{keep, X}, {y, T}}), mp, specialize(q, z, {{keep, X}, {y, T}}), mq));
        }
        return interpolate_z(ts, vs);
    };
    std::vector<ZPoly> RA, RB;
    std::vector<Integer> xs;
    int degA = -1, degB = -1;
    for (int i = 0; i <= D; ++i) {
        Integer X = point(i);
        xs.push_back(X);
        RA.push_back(inner(a, ma, dyA, X));
        RB.push_back(inner(b, mb, dyB, X));
        degA = std::max(degA, zdeg(RA.back()));
        degB = std::max(degB, zdeg(RB.back()));
    }
    if (degA < 0 || degB < 0) return {};
    if (degA == 0 && degB == 0) return {};
    // formal degrees equal to the true y-degrees (sampled at more points than any coefficient degree)
    std::vector<Integer> ys;
    for (size_t i = 0; i < xs.size(); ++i) ys.push_back(zsylvester(RA[i], degA, RB[i], degB));
    return interpolate(xs, ys);
}

} // namespace

Q eliminant(const std::vector<MPoly>& eqs0, int keep, const std::vector<int>& w) {
    std::vector<MPoly> eqs;
    for (const auto& e : eqs0)
        if (!e.is_zero()) eqs.push_back(e);
    if (eqs.empty()) return {};
    const int n = eqs[0].nvars();
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != keep) others.push_back(i);
    Q g;
    if (others.empty()) {
        for (const auto& e : eqs) g = gcd_or(g, branchdiv::to_upoly(e, keep));
        return g;
    }
    if (others.size() == 1) {
        for (size_t i = 0; i < eqs.size(); ++i)
            for (size_t j = i + 1; j < eqs.size(); ++j) g = gcd_or(g, chain2(eqs[i], eqs[j], keep, others[0], w));
        return g;
    }
    if (others.size() != 2) throw std::invalid_argument("oracle handles at most three variables");
    // eliminate the variable of smaller degree first
    auto maxdeg = [&](int v) {
        int d = 0;
        for (const auto& e : eqs) d = std::max(d, e.degree(v));
        return d;
    };
    int y = others[0], z = others[1];
    if (maxdeg(y) < maxdeg(z)) std::swap(y, z);
    for (size_t p = 0; p < eqs.size(); ++p)
        for (size_t i = 0; i < eqs.size(); ++i)
            for (size_t j = i + 1; j < eqs.size(); ++j) {
                if (i == p || j == p) continue;
                g = gcd_or(g, chain3(eqs[p], eqs[i], eqs[j], keep, y, z, w));
            }
    return g;
}

namespace {

using branchdiv::ClosedPoint;
using branchdiv::FieldElem;
using branchdiv::FieldPtr;
using branchdiv::KPoly;
using branchdiv::KUPoly;

// coefficients in v of p with every other live variable fixed
KUPoly slice(const KPoly& p, int v, const std::vector<std::pair<int, FieldElem>>& vals) {
    std::vector<FieldElem> c(static_cast<size_t>(std::max(p.degree(v), 0) + 1), FieldElem(0));
    for (const auto& [m, a] : p.terms()) {
        FieldElem t = a;
        for (const auto& [i, x] : vals)
            for (unsigned k = 0; k < branchdiv::exponent(m, i); ++k) t = t * x;
        c[branchdiv::exponent(m, v)] = c[branchdiv::exponent(m, v)] + t;
    }
    return KUPoly(std::move(c));
}

FieldElem ksylvester(const KUPoly& a, int m, const KUPoly& b, int n) {
    if (m == 0 && n == 0) return FieldElem(1);
    const size_t N = static_cast<size_t>(m + n);
    branchdiv::Matrix<FieldElem> M(N, N);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M(static_cast<size_t>(r), static_cast<size_t>(r + m - i)) = a.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M(static_cast<size_t>(n + r), static_cast<size_t>(r + n - i)) = b.coeff(i);
    return branchdiv::determinant(std::move(M));
}

KUPoly klagrange(const std::vector<Rational>& xs, const std::vector<FieldElem>& ys) {
    const size_t n = xs.size();
    std::vector<FieldElem> c = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / FieldElem(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    KUPoly r;
    for (size_t k = n; k-- > 0;) r = r * KUPoly{FieldElem(-xs[k]), FieldElem(1)} + KUPoly::constant(c[k]);
    return r;
}

KUPoly kgcd(const KUPoly& a, const KUPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    return branchdiv::gcd(a, b);
}

// Res_z(a, b) over K as a polynomial in y (both live variables of a and b).
KUPoly kchain2(const KPoly& a, const KPoly& b, int y, int z) {
    const int m = a.degree(z), n = b.degree(z);
    if (m <= 0 || n <= 0) return {};
    const int D = n * std::max(a.degree(y), 0) + m * std::max(b.degree(y), 0);
    std::vector<Rational> xs;
    std::vector<FieldElem> ys;
    for (int i = 0; i <= D; ++i) {
        FieldElem Y(Rational(point(i)));
        xs.push_back(Rational(point(i)));
        ys.push_back(ksylvester(slice(a, z, {{y, Y}}), m, slice(b, z, {{y, Y}}), n));
    }
    return klagrange(xs, ys);
}

using Fixed = std::vector<std::pair<int, FieldElem>>;

// Points of the fiber over the fixed coordinates (in K), with the live variables `live` (1 or 2).
// Irreducible factors of degree > 1 over K are adjoined.
void fiber(const std::vector<KPoly>& eqs, const FieldPtr& K, std::vector<int> live, const Fixed& fixed,
           std::vector<std::pair<FieldPtr, Fixed>>& out) {
    const int y = live[0];
    KUPoly h;
    if (live.size() == 1) {
        for (const auto& e : eqs) h = kgcd(h, slice(e, y, fixed));
    } else {
        const int z = live[1];
        std::vector<KPoly> sp;
        for (const auto& e : eqs) {
            KPoly q = e;
            for (const auto& [i, x] : fixed) q = q.subst({{i, KPoly::constant(e.vars(), x)}});
            if (!q.is_zero()) sp.push_back(q);
        }
        for (size_t i = 0; i < sp.size(); ++i) {
            if (sp[i].degree(z) <= 0) h = kgcd(h, slice(sp[i], y, {}));
            for (size_t j = i + 1; j < sp.size(); ++j) h = kgcd(h, kchain2(sp[i], sp[j], y, z));
        }
    }
    if (h.is_zero()) throw std::domain_error("oracle: positive-dimensional fiber");
    if (h.degree() == 0) return;
    for (const auto& [psi, mult] : branchdiv::factor_over(h, K)) {
        (void)mult;
        FieldPtr L = K;
        Fixed f;
        FieldElem root;
        if (psi.degree() == 1) {
            root = -psi.coeff(0) / psi.coeff(1);
            f = fixed;
        } else {
            auto ext = branchdiv::adjoin_root(K, psi);
            L = ext.field;
            root = ext.beta;
            for (const auto& [i, x] : fixed) f.emplace_back(i, K ? branchdiv::embed(x, ext.alpha) : x);
        }
        f.emplace_back(y, root);
        if (live.size() == 1) out.emplace_back(L, f);
        else fiber(eqs, L, {live[1]}, f, out);
    }
}

std::vector<ClosedPoint> solve_keep(const std::vector<MPoly>& eqs, int keep, const std::vector<int>& w) {
    const int n = eqs[0].nvars();
    Q E = eliminant(eqs, keep, w);
    if (E.is_zero()) throw std::domain_error("oracle: positive-dimensional solution set");
    std::vector<int> live;
    for (int i = 0; i < n; ++i)
        if (i != keep) live.push_back(i);
    // within the fiber, eliminate the smaller-degree variable last
    if (live.size() == 2) {
        int d0 = 0, d1 = 0;
        for (const auto& e : eqs) {
            d0 = std::max(d0, e.degree(live[0]));
            d1 = std::max(d1, e.degree(live[1]));
        }
        if (d0 < d1) std::swap(live[0], live[1]);
    }
    std::vector<KPoly> K_eqs;
    for (const auto& e : eqs) K_eqs.push_back(branchdiv::to_field(e));
    std::vector<ClosedPoint> pts;
    if (E.degree() == 0) return pts;
    for (const auto& [phi, mult] : branchdiv::factor_q(E)) {
        (void)mult;
        FieldPtr K;
        FieldElem theta;
        if (phi.degree() == 1) theta = FieldElem(-phi.c[0] / phi.c[1]);
        else {
            K = branchdiv::make_field(phi.monic());
            theta = FieldElem::generator(K);
        }
        std::vector<std::pair<FieldPtr, Fixed>> sols;
        if (live.empty()) sols.emplace_back(K, Fixed{{keep, theta}});
        else fiber(K_eqs, K, live, {{keep, theta}}, sols);
        for (const auto& [L, s] : sols) {
            std::vector<FieldElem> c(static_cast<size_t>(n));
            for (const auto& [i, x] : s) c[static_cast<size_t>(i)] = x;
            for (const auto& e : K_eqs)
                if (!e.eval(c).is_zero()) throw std::logic_error("oracle: fiber point fails substitution");
            pts.push_back(branchdiv::canonical_affine(c));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

std::vector<branchdiv::ClosedPoint> solve(const std::vector<MPoly>& eqs0, const std::vector<int>& w) {
    std::vector<MPoly> eqs;
    for (const auto& e : eqs0)
        if (!e.is_zero()) eqs.push_back(e);
    if (eqs.empty()) throw std::domain_error("oracle: empty system");
    const int n = eqs[0].nvars();
    if (n > 3) throw std::invalid_argument("oracle handles at most three variables");
    for (const auto& e : eqs)
        if (e.is_constant()) return {};
    // a variable fixed by a linear equation in it alone is substituted away first
    for (const auto& e : eqs) {
        int x = -1;
        for (int i = 0; i < n && x < 0; ++i)
            if (e.degree(i) > 0) x = i;
        if (e.degree(x) != 1 || e.total_degree() != 1) continue;
        bool alone = true;
        for (int i = 0; i < n; ++i) alone = alone && (i == x || e.degree(i) <= 0);
        if (!alone) continue;
        const Rational r = -e.coefficient(branchdiv::Monomial{0}) / e.coefficient(e.lead().first);
        std::vector<std::string> names;
        std::vector<int> w2;
        for (int i = 0; i < n; ++i)
            if (i != x) {
                names.push_back((*e.vars())[static_cast<size_t>(i)]);
                w2.push_back(w[static_cast<size_t>(i)]);
            }
        std::vector<branchdiv::ClosedPoint> out;
        if (names.empty()) {
            for (const auto& g : eqs)
                if (g.eval(std::vector<Rational>{r}) != 0) return {};
            out.push_back(branchdiv::canonical_affine({FieldElem(r)}));
            return out;
        }
        const auto V = branchdiv::make_vars(names);
        std::vector<std::optional<MPoly>> img;
        for (int i = 0, k = 0; i < n; ++i) img.push_back(i == x ? MPoly::constant(V, r) : MPoly::variable(V, k++));
        std::vector<MPoly> rest;
        for (const auto& g : eqs) {
            MPoly h = g.compose(V, img);
            if (h.is_zero()) continue;
            if (h.is_constant()) return {};
            rest.push_back(h);
        }
        if (rest.empty()) throw std::domain_error("oracle: positive-dimensional solution set");
        for (const auto& p : solve(rest, w2)) {
            std::vector<FieldElem> c = p.coords;
            c.insert(c.begin() + x, FieldElem(r));
            out.push_back(branchdiv::canonical_affine(c));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    return solve_keep(eqs, 0, w);
}

Q chain(const MPoly& p, const MPoly& a, const MPoly& b, int keep, int y, int z, const std::vector<int>& w) {
    return chain3(p, a, b, keep, y, z, w);
}

Q squarefree(const Q& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return Q::constant(Rational(1));
    return branchdiv::exact_quotient(p.monic(), branchdiv::gcd_q(p, p.derivative()));
}

MPoly branch_quartic(const std::array<Rational, 5>& f, const std::array<Rational, 15>& q, const branchdiv::Vars& z) {
    std::vector<MPoly> v;
    for (int i = 0; i < 5; ++i) v.push_back(MPoly::variable(z, i));
    MPoly lin(z), quad(z);
    for (int i = 0; i < 5; ++i) lin += f[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    size_t k = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) quad += q[k++] * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return v[0] * v[3] * v[4] * lin - quad * quad;
}

} // namespace oracle

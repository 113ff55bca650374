#include "branchdiv/exactalg/resultant.hpp"

#include "branchdiv/exactalg/factor.hpp"
#include "branchdiv/exactalg/modp.hpp"

#include <cmath>

namespace branchdiv {

namespace {

using Coeffs = std::vector<MPoly>;

int cdeg(const Coeffs& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[static_cast<size_t>(d)].is_zero()) --d;
    return d;
}

void ctrim(Coeffs& c) { c.resize(static_cast<size_t>(cdeg(c) + 1), MPoly()); }

Coeffs cprem(Coeffs a, const Coeffs& b) {
    const int db = cdeg(b);
    const MPoly& lb = b[static_cast<size_t>(db)];
    int da = cdeg(a);
    int e = da - db + 1;
    while (da >= db) {
        MPoly la = a[static_cast<size_t>(da)];
        for (int i = 0; i <= da; ++i) a[static_cast<size_t>(i)] = lb * a[static_cast<size_t>(i)];
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(da - db + j)] -= la * b[static_cast<size_t>(j)];
        --e;
        ctrim(a);
        da = cdeg(a);
    }
    if (e > 0) {
        MPoly m = lb.pow(static_cast<unsigned>(e));
        for (auto& x : a) x = m * x;
    }
    ctrim(a);
    return a;
}

MPoly exact(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return a;
    if (b.is_constant()) return inverse(b.constant_term()) * a;
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("subresultant: inexact division");
    return *q;
}

MPoly pow_or_one(const MPoly& base, const Vars& v, int e) {
    return e == 0 ? MPoly::constant(v, Rational(1)) : base.pow(static_cast<unsigned>(e));
}

} // namespace

MPoly prem(const MPoly& a, const MPoly& b, int v) {
    Coeffs r = cprem(a.coeffs_in(v), b.coeffs_in(v));
    return MPoly::from_coeffs_in(a.vars(), v, r);
}

MPoly resultant(const MPoly& p, const MPoly& q, int v) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    const Vars& vars = p.vars() ? p.vars() : q.vars();
    if (p.is_zero() || q.is_zero()) return MPoly(vars);
    Coeffs A = p.coeffs_in(v), B = q.coeffs_in(v);
    int sgn_ = 1;
    if (cdeg(A) < cdeg(B)) {
        if (cdeg(A) % 2 == 1 && cdeg(B) % 2 == 1) sgn_ = -sgn_;
        std::swap(A, B);
    }
    if (cdeg(B) == 0) {
        MPoly r = pow_or_one(B[0], vars, cdeg(A));
        return sgn_ == 1 ? r : -r;
    }
    MPoly g = MPoly::constant(vars, Rational(1)), h = g;
    while (true) {
        const int da = cdeg(A), db = cdeg(B);
        const int delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) sgn_ = -sgn_;
        Coeffs R = cprem(A, B);
        A = B;
        MPoly den = g * pow_or_one(h, vars, delta);
        for (auto& x : R) x = exact(x, den);
        B = R;
        g = A[static_cast<size_t>(cdeg(A))];
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (cdeg(B) <= 0) break;
    }
    if (cdeg(B) < 0) return MPoly(vars);
    const int da = cdeg(A);
    const MPoly& lb = B[0];
    MPoly res = da == 0 ? MPoly::constant(vars, Rational(1)) : exact(lb.pow(static_cast<unsigned>(da)), pow_or_one(h, vars, da - 1));
    return sgn_ == 1 ? res : -res;
}

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& v) {
    const MPoly& ref = p.vars() ? p : q;
    return resultant(p, q, ref.index_of(v));
}

ResultantReport resultant_report(const MPoly& p, const MPoly& q, int v) {
    ResultantReport r;
    r.value = resultant(p, q, v);
    auto cp = p.coeffs_in(v), cq = q.coeffs_in(v);
    r.lead_p = cp.empty() ? MPoly(p.vars()) : cp.back();
    r.lead_q = cq.empty() ? MPoly(q.vars()) : cq.back();
    r.degenerate = !r.lead_p.is_constant() && !r.lead_q.is_constant();
    return r;
}

namespace {

// Integer coefficient table c[i][j] of x_v^i x_keep^j after clearing denominators.
struct BiTable {
    std::vector<std::vector<Integer>> c; // c[i] coefficient of v^i, as poly in keep
    int deg_v = -1, deg_k = -1;
};

BiTable to_table(const MPoly& a, int v, int keep) {
    BiTable t;
    Integer l = 1;
    for (const auto& [m, c] : a.terms()) {
        for (int i = 0; i < a.nvars(); ++i)
            if (i != v && i != keep && exponent(m, i) != 0) throw std::invalid_argument("resultant_bivariate: extra variable present");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    t.deg_v = a.degree(v);
    t.deg_k = a.degree(keep);
    t.c.assign(static_cast<size_t>(t.deg_v + 1), std::vector<Integer>(static_cast<size_t>(std::max(t.deg_k, 0) + 1), Integer(0)));
    for (const auto& [m, c] : a.terms()) t.c[exponent(m, v)][exponent(m, keep)] = c.get_num() * (l / c.get_den());
    return t;
}

double log2_norm(const BiTable& t) {
    // log2 of sqrt(sum_i ||c_i||_1^2)
    Integer s = 0;
    for (const auto& row : t.c) {
        Integer n1 = 0;
        for (const auto& x : row) n1 += abs(x);
        s += n1 * n1;
    }
    if (s == 0) return 0.0;
    long e;
    double d = mpz_get_d_2exp(&e, s.get_mpz_t());
    return 0.5 * (std::log2(d) + static_cast<double>(e));
}

} // namespace

UPoly<Rational> resultant_bivariate(const MPoly& a, const MPoly& b, int v, int keep) {
    if (a.is_zero() || b.is_zero()) return {};
    BiTable A = to_table(a, v, keep), B = to_table(b, v, keep);
    const int m = A.deg_v, n = B.deg_v;
    if (m == 0 && n == 0) return UPoly<Rational>::constant(Rational(1));
    const int bound_deg = n * std::max(A.deg_k, 0) + m * std::max(B.deg_k, 0);
    // |coeff| <= ||A||^n ||B||^m (Hadamard on the Sylvester matrix over the unit circle)
    const double bits = n * log2_norm(A) + m * log2_norm(B) + 2.0;

    std::vector<Integer> acc(static_cast<size_t>(bound_deg + 1), Integer(0));
    Integer modulus = 1;
    double have_bits = 0.0;
    for (size_t idx = 0; have_bits < bits; ++idx) {
        const modp::u64 p = modp::nth_prime(idx);
        std::vector<modp::u64> xs, ys;
        modp::u64 x = 0;
        auto reduce_at = [&](const BiTable& T, modp::u64 at) {
            modp::Poly r;
            r.c.resize(T.c.size());
            for (size_t i = 0; i < T.c.size(); ++i) {
                modp::u64 s = 0;
                for (size_t j = T.c[i].size(); j-- > 0;) s = (modp::mulmod(s, at, p) + modp::reduce(T.c[i][j], p)) % p;
                r.c[i] = s;
            }
            r.trim();
            return r;
        };
        while (static_cast<int>(xs.size()) <= bound_deg) {
            modp::Poly ap = reduce_at(A, x), bp = reduce_at(B, x);
            xs.push_back(x);
            ys.push_back(modp::resultant(ap, m, bp, n, p));
            ++x;
        }
        modp::Poly r = modp::interpolate(xs, ys, p);
        Integer P(static_cast<unsigned long>(p));
        Integer inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
        for (size_t i = 0; i < acc.size(); ++i) {
            Integer ri(static_cast<unsigned long>(i < r.c.size() ? r.c[i] : 0));
            Integer diff = ri - acc[i];
            diff *= inv;
            mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), P.get_mpz_t());
            acc[i] += modulus * diff;
        }
        modulus *= P;
        have_bits += std::log2(static_cast<double>(p));
    }
    Integer half = modulus / 2;
    std::vector<Rational> out;
    for (auto& z : acc) {
        if (z > half) z -= modulus;
        out.emplace_back(z);
    }
    // undo denominator clearing: Res(la*a, lb*b) = la^n lb^m Res(a,b)
    Integer la = 1, lb = 1;
    for (const auto& [mm, c] : a.terms()) mpz_lcm(la.get_mpz_t(), la.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [mm, c] : b.terms()) mpz_lcm(lb.get_mpz_t(), lb.get_mpz_t(), c.get_den().get_mpz_t());
    Integer scale_num;
    Integer lan, lbm;
    mpz_pow_ui(lan.get_mpz_t(), la.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(lbm.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(m));
    Rational s(1);
    s /= Rational(lan * lbm);
    for (auto& x : out) x *= s;
    return UPoly<Rational>(std::move(out));
}

} // namespace branchdiv

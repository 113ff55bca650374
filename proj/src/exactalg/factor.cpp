#include "branchdiv/exactalg/factor.hpp"

#include "branchdiv/exactalg/modp.hpp"

#include <algorithm>
#include <numeric>

namespace branchdiv {

namespace {

using modp::u64;

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& x : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

ZPoly primitive_part(ZPoly f) {
    trim(f);
    if (f.empty()) return f;
    Integer c = content(f);
    if (f.back() < 0) c = -c;
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return f;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// --- arithmetic modulo m on integer polynomials (nonnegative residues) ---

void zmod(ZPoly& f, const Integer& m) {
    for (auto& x : f) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    trim(f);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

// Division by a monic polynomial modulo m.
void zdivrem_monic(const ZPoly& a, const ZPoly& h, const Integer& m, ZPoly& q, ZPoly& r) {
    r = a;
    zmod(r, m);
    q.clear();
    const int dh = deg(h);
    if (deg(r) < dh) return;
    q.assign(static_cast<size_t>(deg(r) - dh + 1), 0);
    for (int i = deg(r); i >= dh; --i) {
        Integer t = r[static_cast<size_t>(i)];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        q[static_cast<size_t>(i - dh)] = t;
        for (int j = 0; j <= dh; ++j) r[static_cast<size_t>(i - dh + j)] -= t * h[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(dh));
    zmod(r, m);
    zmod(q, m);
}

ZPoly from_modp(const modp::Poly& f) {
    ZPoly r;
    for (auto x : f.c) r.emplace_back(static_cast<unsigned long>(x));
    return r;
}

modp::Poly to_modp(const ZPoly& f, u64 p) { return modp::from_integer(f, p); }

ZPoly symmetric(ZPoly f, const Integer& m) {
    Integer half = m / 2;
    for (auto& x : f) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half) x -= m;
    }
    trim(f);
    return f;
}

// One quadratic Hensel step: f = g h mod m with h monic, s g + t h = 1 mod m -> mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h));
    zmod(e, m2);
    ZPoly q, r;
    zdivrem_monic(zmul(s, e), h, m2, q, r);
    ZPoly gs = zadd(zadd(g, zmul(t, e)), zmul(q, g));
    zmod(gs, m2);
    ZPoly hs = zadd(h, r);
    zmod(hs, m2);
    ZPoly b = zsub(zadd(zmul(s, gs), zmul(t, hs)), ZPoly{Integer(1)});
    zmod(b, m2);
    ZPoly c, d;
    zdivrem_monic(zmul(s, b), hs, m2, c, d);
    ZPoly ss = zsub(s, d);
    zmod(ss, m2);
    ZPoly ts = zsub(zsub(t, zmul(t, b)), zmul(c, gs));
    zmod(ts, m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

// Lift f = lc * prod(factors) mod p to mod p^k. Factors are monic.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, u64 p, const Integer& pk) {
    std::vector<ZPoly> lifted;
    ZPoly F = f;
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
        // h = factors[i] monic, g = lc(F) * prod_{j>i} factors[j]
        modp::Poly gp{{modp::reduce(F.back(), p)}};
        for (size_t j = i + 1; j < factors.size(); ++j) gp = modp::mul(gp, factors[j], p);
        modp::Poly gg, sp, tp;
        modp::xgcd(gp, factors[i], gg, sp, tp, p);
        ZPoly g = from_modp(gp), h = from_modp(factors[i]), s = from_modp(sp), t = from_modp(tp);
        Integer m(static_cast<unsigned long>(p));
        while (m < pk) {
            hensel_step(F, g, h, s, t, m);
            m *= m;
        }
        zmod(g, pk);
        zmod(h, pk);
        lifted.push_back(h);
        F = symmetric(g, pk);
    }
    // last factor: make monic version of F mod p^k
    Integer inv;
    Integer lc = F.back();
    mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t())) throw std::runtime_error("Hensel lifting: leading coefficient not invertible");
    for (auto& x : F) x *= inv;
    zmod(F, pk);
    lifted.push_back(F);
    return lifted;
}

Integer max_abs(const ZPoly& f) {
    Integer m = 0;
    for (const auto& x : f)
        if (abs(x) > m) m = abs(x);
    return m;
}

bool zdivides(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
    // exact division over Z
    if (deg(g) > deg(f)) return false;
    ZPoly r = f;
    ZPoly q(static_cast<size_t>(deg(f) - deg(g) + 1), 0);
    const int dg = deg(g);
    for (int i = deg(f); i >= dg; --i) {
        if (r[static_cast<size_t>(i)] == 0) continue;
        if (!mpz_divisible_p(r[static_cast<size_t>(i)].get_mpz_t(), g.back().get_mpz_t())) return false;
        Integer t;
        mpz_divexact(t.get_mpz_t(), r[static_cast<size_t>(i)].get_mpz_t(), g.back().get_mpz_t());
        q[static_cast<size_t>(i - dg)] = t;
        for (int j = 0; j <= dg; ++j) r[static_cast<size_t>(i - dg + j)] -= t * g[static_cast<size_t>(j)];
    }
    for (int i = 0; i < dg; ++i)
        if (r[static_cast<size_t>(i)] != 0) return false;
    trim(q);
    quotient = q;
    return true;
}

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    f = primitive_part(f);
    const int n = deg(f);
    if (n <= 1) return {f};

    // choose a prime with few modular factors
    u64 best_p = 0;
    std::vector<modp::Poly> best;
    int good = 0;
    for (size_t idx = 0; good < 5 && idx < 200; ++idx) {
        u64 p = modp::nth_prime(idx);
        if (modp::reduce(f.back(), p) == 0) continue;
        modp::Poly fp = to_modp(f, p);
        if (modp::gcd(fp, modp::derivative(fp, p), p).degree() > 0) continue;
        auto fac = modp::factor_squarefree(fp, p);
        ++good;
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
    if (best.size() == 1) return {f};

    const u64 p = best_p;
    Integer lc = f.back();
    // Mignotte-style bound on coefficients of a factor times lc
    Integer B = max_abs(f) * abs(lc) * (n + 1);
    B <<= static_cast<unsigned long>(n + 1);
    Integer pk(static_cast<unsigned long>(p));
    while (pk <= 2 * B) pk *= static_cast<unsigned long>(p);

    std::vector<ZPoly> lifted = multifactor_lift(f, best, p, pk);
    std::vector<ZPoly> result;
    std::vector<size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    ZPoly F = f;
    size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<size_t> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            ZPoly g{F.back()};
            for (auto ci : comb) {
                g = zmul(g, lifted[remaining[ci]]);
                zmod(g, pk);
            }
            g = primitive_part(symmetric(g, pk));
            ZPoly q;
            if (zdivides(g, F, q)) {
                result.push_back(g);
                F = primitive_part(q);
                std::vector<size_t> rest;
                for (size_t k = 0; k < remaining.size(); ++k)
                    if (std::find(comb.begin(), comb.end(), k) == comb.end()) rest.push_back(remaining[k]);
                remaining = rest;
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == remaining.size() - s + static_cast<size_t>(i)) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (deg(F) > 0) result.push_back(F);
    return result;
}

} // namespace

ZPoly primitive_integer(const UPoly<Rational>& f) {
    Integer l = 1;
    for (const auto& x : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    ZPoly r;
    for (const auto& x : f.c) r.push_back(x.get_num() * (l / x.get_den()));
    return primitive_part(r);
}

UPoly<Rational> to_rational(const ZPoly& f) {
    std::vector<Rational> c;
    for (const auto& x : f) c.emplace_back(x);
    return UPoly<Rational>(std::move(c));
}

bool poly_less(const UPoly<Rational>& a, const UPoly<Rational>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Rational& x = a.c[static_cast<size_t>(i)];
        const Rational& y = b.c[static_cast<size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

UPoly<Rational> gcd_q(const UPoly<Rational>& a, const UPoly<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UPoly<Rational>::constant(Rational(1));
    if (std::max(a.degree(), b.degree()) <= 6) return gcd(a, b);
    ZPoly A = primitive_integer(a), B = primitive_integer(b);
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    int best_deg = std::min(deg(A), deg(B)) + 1;
    ZPoly acc;
    Integer modulus = 1;
    ZPoly prev;
    for (size_t idx = 0; idx < 10000; ++idx) {
        u64 p = modp::nth_prime(idx);
        if (modp::reduce(A.back(), p) == 0 || modp::reduce(B.back(), p) == 0) continue;
        modp::Poly g = modp::gcd(to_modp(A, p), to_modp(B, p), p);
        if (g.degree() == 0) return UPoly<Rational>::constant(Rational(1));
        if (g.degree() > best_deg) continue;
        g = modp::scale(g, modp::reduce(gamma, p), p);
        ZPoly gz = from_modp(g);
        if (g.degree() < best_deg) {
            best_deg = g.degree();
            acc = gz;
            modulus = Integer(static_cast<unsigned long>(p));
            prev.clear();
        } else {
            // CRT combine
            Integer P(static_cast<unsigned long>(p));
            Integer inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
            acc.resize(static_cast<size_t>(best_deg) + 1, 0);
            gz.resize(static_cast<size_t>(best_deg) + 1, 0);
            for (size_t i = 0; i < acc.size(); ++i) {
                Integer diff = gz[i] - acc[i];
                mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), P.get_mpz_t());
                diff = (diff * inv);
                mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), P.get_mpz_t());
                acc[i] += modulus * diff;
            }
            modulus *= P;
        }
        ZPoly cand = primitive_part(symmetric(acc, modulus));
        if (cand == prev) {
            ZPoly q;
            if (zdivides(cand, A, q) && zdivides(cand, B, q)) return to_rational(cand).monic();
        }
        prev = cand;
    }
    throw std::runtime_error("modular gcd did not converge");
}

std::vector<std::pair<UPoly<Rational>, int>> factor_q(const UPoly<Rational>& f) {
    std::vector<std::pair<UPoly<Rational>, int>> out;
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        ZPoly z = primitive_integer(sf);
        // pull out powers of x first
        size_t zeros = 0;
        while (zeros < z.size() && z[zeros] == 0) ++zeros;
        if (zeros > 0) {
            out.emplace_back(UPoly<Rational>::x(), mult);
            z.erase(z.begin(), z.begin() + static_cast<long>(zeros));
        }
        if (deg(z) < 1) continue;
        for (auto& g : zassenhaus(z)) out.emplace_back(to_rational(g).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (poly_less(a.first, b.first)) return true;
        if (poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_q(const UPoly<Rational>& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

int count_real_roots(const UPoly<Rational>& f0) {
    if (f0.degree() < 1) return 0;
    UPoly<Rational> f = squarefree_part(f0);
    std::vector<UPoly<Rational>> seq{f, f.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UPoly<Rational> r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    auto changes = [&](bool plus_inf) {
        int v = 0, last = 0;
        for (const auto& p : seq) {
            if (p.is_zero()) continue;
            int s = sgn(p.lead());
            if (!plus_inf && (p.degree() % 2 == 1)) s = -s;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    return changes(false) - changes(true);
}

std::string to_string(const UPoly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& a = p.c[static_cast<size_t>(i)];
        if (sgn(a) == 0) continue;
        if (!first) s += a < 0 ? " - " : " + ";
        else if (a < 0) s += "-";
        Rational b = abs(a);
        if (i == 0) s += to_string(b);
        else {
            if (b != 1) s += to_string(b) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        first = false;
    }
    return s;
}

} // namespace branchdiv

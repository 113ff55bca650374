#include "branchdiv/exactalg/modp.hpp"

#include <stdexcept>

namespace branchdiv::modp {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

u64 nth_prime(size_t i) {
    static std::vector<u64> cache;
    u64 cand = cache.empty() ? (1ull << 31) - 1 : cache.back() - 2;
    while (cache.size() <= i) {
        while (!is_prime(cand)) cand -= 2;
        cache.push_back(cand);
        cand -= 2;
    }
    return cache[i];
}

u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return powmod(a, p - 2, p);
}

u64 reduce(const Integer& z, u64 p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

u64 reduce(const Rational& q, u64 p) {
    u64 d = reduce(q.get_den(), p);
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    return mulmod(reduce(q.get_num(), p), invmod(d, p), p);
}

Poly from_rational(const UPoly<Rational>& f, u64 p) {
    Poly r;
    r.c.reserve(f.c.size());
    for (const auto& x : f.c) r.c.push_back(reduce(x, p));
    r.trim();
    return r;
}

Poly from_integer(const std::vector<Integer>& f, u64 p) {
    Poly r;
    r.c.reserve(f.size());
    for (const auto& x : f) r.c.push_back(reduce(x, p));
    r.trim();
    return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = x >= p ? x - p : x;
    }
    r.trim();
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = x >= y ? x - y : x + p - y;
    }
    r.trim();
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<unsigned __int128> acc(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c[i]) * b.c[j];
            if ((j & 31) == 31) acc[i + j] %= p;
        }
    }
    r.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<u64>(acc[i] % p);
    r.trim();
    return r;
}

Poly scale(const Poly& a, u64 s, u64 p) {
    Poly r;
    r.c.reserve(a.c.size());
    for (auto x : a.c) r.c.push_back(mulmod(x, s, p));
    r.trim();
    return r;
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p) {
    if (b.is_zero()) throw std::domain_error("mod p division by zero");
    r = a;
    q.c.clear();
    if (a.degree() < b.degree()) return;
    q.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), 0);
    u64 inv = invmod(b.lead(), p);
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        u64 t = mulmod(r.c[static_cast<size_t>(i)], inv, p);
        if (!t) continue;
        q.c[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) {
            u64 s = mulmod(t, b.c[static_cast<size_t>(j)], p);
            u64& x = r.c[static_cast<size_t>(i - db + j)];
            x = x >= s ? x - s : x + p - s;
        }
    }
    r.c.resize(static_cast<size_t>(db));
    r.trim();
    q.trim();
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
    Poly q, r;
    divrem(a, b, q, r, p);
    return r;
}

Poly monic(const Poly& a, u64 p) {
    if (a.is_zero()) return a;
    return scale(a, invmod(a.lead(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.is_zero()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, u64 p) {
    Poly r0 = a, r1 = b, s0{{1}}, s1, t0, t1{{1}};
    while (!r1.is_zero()) {
        Poly q, r;
        divrem(r0, r1, q, r, p);
        Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = r0.is_zero() ? 1 : invmod(r0.lead(), p);
    g = scale(r0, inv, p);
    s = scale(s0, inv, p);
    t = scale(t0, inv, p);
}

Poly derivative(const Poly& a, u64 p) {
    Poly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod(a.c[i], i % p, p);
    r.trim();
    return r;
}

Poly powmod(Poly base, Integer e, const Poly& m, u64 p) {
    Poly r{{1}};
    base = rem(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, p), m, p);
        e >>= 1;
        if (e > 0) base = rem(mul(base, base, p), m, p);
    }
    return r;
}

u64 eval(const Poly& a, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = (mulmod(r, x, p) + a.c[i]) % p;
    return r;
}

namespace {

u64 next_random(u64& s) {
    s += 0x9e3779b97f4a7c15ull;
    u64 z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

void equal_degree(const Poly& f, int d, u64 p, u64& seed, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(monic(f, p));
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        Poly a;
        a.c.resize(static_cast<size_t>(f.degree()));
        for (auto& x : a.c) x = next_random(seed) % p;
        a.trim();
        if (a.degree() < 1) continue;
        Poly g = gcd(a, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            Poly q, r;
            divrem(f, g, q, r, p);
            equal_degree(g, d, p, seed, out);
            equal_degree(q, d, p, seed, out);
            return;
        }
        Poly b = powmod(a, e, f, p);
        b = sub(b, Poly{{1}}, p);
        g = gcd(b, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            Poly q, r;
            divrem(f, g, q, r, p);
            equal_degree(g, d, p, seed, out);
            equal_degree(q, d, p, seed, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& f0, u64 p, u64 seed) {
    if (p == 2) throw std::invalid_argument("odd prime required");
    std::vector<Poly> out;
    Poly f = monic(f0, p);
    if (f.degree() < 1) return out;
    Poly x{{0, 1}};
    Poly h = x;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (g.degree() > 0) {
            equal_degree(g, d, p, seed, out);
            Poly q, r;
            divrem(f, g, q, r, p);
            f = q;
            h = rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.push_back(monic(f, p));
    return out;
}

} // namespace branchdiv::modp

namespace branchdiv::modp {

u64 resultant(const Poly& a0, int da, const Poly& b0, int db, u64 p) {
    int ma = a0.degree(), mb = b0.degree();
    if (ma < da && mb < db) return 0;
    if (ma < 0 || mb < 0) return (ma < 0 && db == 0 && mb == 0) ? powmod(b0.lead(), static_cast<u64>(da), p)
                                   : (mb < 0 && da == 0 && ma == 0) ? powmod(a0.lead(), static_cast<u64>(db), p)
                                                                    : 0;
    u64 acc = 1;
    if (ma < da) {
        acc = powmod(b0.lead(), static_cast<u64>(da - ma), p);
        if ((static_cast<long>(db) * (da - ma)) % 2 == 1) acc = (p - acc) % p;
    } else if (mb < db) {
        acc = powmod(a0.lead(), static_cast<u64>(db - mb), p);
    }
    Poly a = a0, b = b0;
    while (true) {
        int m = a.degree(), n = b.degree();
        if (n == 0) return mulmod(acc, powmod(b.lead(), static_cast<u64>(m), p), p);
        if (m < n) {
            if ((m % 2 == 1) && (n % 2 == 1)) acc = (p - acc) % p;
            std::swap(a, b);
            continue;
        }
        Poly r = rem(a, b, p);
        if (r.is_zero()) return 0;
        if ((m % 2 == 1) && (n % 2 == 1)) acc = (p - acc) % p;
        acc = mulmod(acc, powmod(b.lead(), static_cast<u64>(m - r.degree()), p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    // Newton divided differences
    const size_t n = xs.size();
    std::vector<u64> c(ys);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            u64 num = (c[i] + p - c[i - 1]) % p;
            u64 den = (xs[i] + p - xs[i - j]) % p;
            c[i] = mulmod(num, invmod(den, p), p);
            if (i == j) break;
        }
    Poly r;
    r.c.assign(1, n ? c[n - 1] : 0);
    for (size_t k = n - 1; k-- > 0;) {
        // r = r * (x - xs[k]) + c[k]
        Poly nr;
        nr.c.assign(r.c.size() + 1, 0);
        for (size_t i = 0; i < r.c.size(); ++i) {
            nr.c[i + 1] = (nr.c[i + 1] + r.c[i]) % p;
            nr.c[i] = (nr.c[i] + p - mulmod(r.c[i], xs[k], p)) % p;
        }
        nr.c[0] = (nr.c[0] + c[k]) % p;
        r = std::move(nr);
    }
    r.trim();
    return r;
}

} // namespace branchdiv::modp

#pragma once

#include "branchdiv/exactalg/upoly.hpp"

#include <cstdint>
#include <vector>

namespace branchdiv::modp {

using u64 = std::uint64_t;

bool is_prime(u64 n);
// Primes below 2^31, descending, deterministic.
u64 nth_prime(size_t i);

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
u64 reduce(const Integer& z, u64 p);
// Rational image; throws if the denominator vanishes mod p.
u64 reduce(const Rational& q, u64 p);

// Dense polynomial over F_p, c[i] coefficient of x^i, trimmed.
struct Poly {
    std::vector<u64> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

Poly from_rational(const UPoly<Rational>& f, u64 p);
Poly from_integer(const std::vector<Integer>& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 s, u64 p);
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, u64 p);
Poly derivative(const Poly& a, u64 p);
Poly powmod(Poly base, Integer e, const Poly& m, u64 p);
u64 eval(const Poly& a, u64 x, u64 p);

// Sylvester resultant with formal degrees da >= deg a, db >= deg b.
u64 resultant(const Poly& a, int da, const Poly& b, int db, u64 p);
// Polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

// Monic irreducible factors of a squarefree monic polynomial (Cantor-Zassenhaus).
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, u64 seed = 0x9e3779b97f4a7c15ull);

} // namespace branchdiv::modp

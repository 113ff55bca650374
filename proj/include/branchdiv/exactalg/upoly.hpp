#pragma once

#include "branchdiv/exactalg/rational.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace branchdiv {

namespace detail {
// Unqualified call so argument-dependent lookup sees is_zero overloads declared later.
template <class K>
bool coeff_is_zero(const K& a) { return is_zero(a); }
} // namespace detail

// Dense univariate polynomial, c[i] is the coefficient of x^i.
// K needs: K() == 0, K(int), + - * /, is_zero(K), inverse(K).
template <class K>
class UPoly {
public:
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<K> coeffs) : c(coeffs) { trim(); }

    static UPoly constant(const K& a) { return UPoly(std::vector<K>{a}); }
    static UPoly monomial(const K& a, int n) {
        std::vector<K> v(static_cast<size_t>(n) + 1, K(0));
        v[static_cast<size_t>(n)] = a;
        return UPoly(std::move(v));
    }
    static UPoly x() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const K& lead() const { return c.back(); }
    K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : K(0); }

    void trim() {
        while (!c.empty() && detail::coeff_is_zero(c.back())) c.pop_back();
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] + o.c[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] - o.c[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& x : a.c) x = K(0) - x;
        return a;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (detail::coeff_is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& s, UPoly a) {
        for (auto& x : a.c) x = s * x;
        a.trim();
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    K eval(const K& x) const {
        K r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    UPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<K> r(c.size() - 1, K(0));
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = K(static_cast<int>(i)) * c[i];
        return UPoly(std::move(r));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        K inv = inverse(lead());
        return inv * *this;
    }

    // p(q(x))
    UPoly compose(const UPoly& q) const {
        UPoly r;
        for (size_t i = c.size(); i-- > 0;) r = r * q + constant(c[i]);
        return r;
    }

    template <class F>
    auto map(F&& f) const -> UPoly<decltype(f(std::declval<K>()))> {
        using L = decltype(f(std::declval<K>()));
        std::vector<L> v;
        v.reserve(c.size());
        for (const auto& x : c) v.push_back(f(x));
        return UPoly<L>(std::move(v));
    }
};

template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly<K>{}, a};
    std::vector<K> r = a.c;
    std::vector<K> q(static_cast<size_t>(a.degree() - b.degree() + 1), K(0));
    K inv = inverse(b.lead());
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        K t = r[static_cast<size_t>(i)] * inv;
        if (is_zero(t)) continue;
        q[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] = r[static_cast<size_t>(i - db + j)] - t * b.c[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {UPoly<K>(std::move(q)), UPoly<K>(std::move(r))};
}

template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) { return divrem(a, b).second; }

template <class K>
UPoly<K> exact_quotient(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

// Monic gcd (zero if both are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Returns g = gcd(a, b) monic and s, t with s a + t b = g.
template <class K>
void xgcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b, s0 = UPoly<K>::constant(K(1)), s1, t0, t1 = UPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    K inv = inverse(r0.lead());
    g = inv * r0;
    s = inv * s0;
    t = inv * t0;
}

template <class K>
UPoly<K> pow(UPoly<K> base, unsigned e) {
    UPoly<K> r = UPoly<K>::constant(K(1));
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

// Yun's algorithm, characteristic zero. Returns (factor, multiplicity), factors monic and nonconstant.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& f) {
    std::vector<std::pair<UPoly<K>, int>> out;
    if (f.degree() < 1) return out;
    UPoly<K> a = f.monic();
    UPoly<K> d = a.derivative();
    UPoly<K> g = gcd(a, d);
    UPoly<K> b = exact_quotient(a, g);
    UPoly<K> c = exact_quotient(d, g);
    UPoly<K> e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly<K> h = gcd(b, e);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = exact_quotient(b, h);
        c = exact_quotient(e, h);
        e = c - b.derivative();
        ++i;
    }
    return out;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
    if (f.degree() < 1) return f.is_zero() ? f : UPoly<K>::constant(K(1));
    return exact_quotient(f.monic(), gcd(f, f.derivative()));
}

// Resultant over a field via the Euclidean remainder sequence.
template <class K>
K resultant(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    K acc(1);
    while (true) {
        int m = a.degree(), n = b.degree();
        if (n == 0) {
            K r = acc;
            for (int i = 0; i < m; ++i) r = r * b.lead();
            return r;
        }
        if (m < n) {
            if ((m % 2 == 1) && (n % 2 == 1)) acc = K(0) - acc;
            std::swap(a, b);
            continue;
        }
        UPoly<K> r = a % b;
        if (r.is_zero()) return K(0);
        // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if ((m % 2 == 1) && (n % 2 == 1)) acc = K(0) - acc;
        for (int i = 0; i < m - r.degree(); ++i) acc = acc * b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

std::string to_string(const UPoly<Rational>& p, const std::string& var = "x");

} // namespace branchdiv

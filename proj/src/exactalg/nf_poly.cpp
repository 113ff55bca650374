#include "branchdiv/exactalg/nf_poly.hpp"

#include "branchdiv/exactalg/factor.hpp"
#include "branchdiv/exactalg/resultant.hpp"

namespace branchdiv {

KUPoly to_kupoly(const UPoly<Rational>& p) {
    return p.map([](const Rational& c) { return FieldElem(c); });
}

bool is_rational_poly(const KUPoly& p) {
    for (const auto& c : p.c)
        if (!c.is_rational()) return false;
    return true;
}

UPoly<Rational> to_rational_poly(const KUPoly& p) {
    return p.map([](const FieldElem& c) { return c.rational_value(); });
}

UPoly<Rational> shifted_norm(const KUPoly& h, const FieldPtr& K, int k) {
    if (!K) {
        UPoly<Rational> r = to_rational_poly(h);
        return r;
    }
    auto vars = make_vars({"t", "x"});
    MPoly t = MPoly::variable(vars, 0), x = MPoly::variable(vars, 1);
    MPoly X = x - Rational(k) * t;
    MPoly H(vars), Xp = MPoly::constant(vars, Rational(1));
    for (size_t i = 0; i < h.c.size(); ++i) {
        MPoly ci(vars);
        const auto& co = h.c[i].coeffs();
        for (size_t j = 0; j < co.size(); ++j)
            if (sgn(co[j]) != 0) ci += MPoly::monomial(vars, monomial_of(0, static_cast<unsigned>(j)), co[j]);
        H += ci * Xp;
        Xp = Xp * X;
    }
    MPoly m = from_upoly(vars, 0, K->modulus());
    return resultant_bivariate(m, H, 0, 1);
}

std::vector<std::pair<KUPoly, int>> factor_over(const KUPoly& h0, const FieldPtr& K) {
    std::vector<std::pair<KUPoly, int>> out;
    if (h0.degree() < 1) return out;
    if (!K) {
        for (auto& [f, m] : factor_q(to_rational_poly(h0))) out.emplace_back(to_kupoly(f), m);
        return out;
    }
    for (const auto& [sf, mult] : squarefree_decomposition(h0)) {
        if (sf.degree() == 1) {
            out.emplace_back(sf, mult);
            continue;
        }
        for (int k : {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}) {
            UPoly<Rational> N = shifted_norm(sf, K, k);
            if (gcd_q(N, N.derivative()).degree() > 0) continue;
            FieldElem a = FieldElem::generator(K);
            KUPoly shift{FieldElem(Rational(k)) * a, FieldElem(1)}; // x + k a
            KUPoly rest = sf;
            for (const auto& [Ni, e] : factor_q(N)) {
                (void)e;
                KUPoly g = gcd(rest, to_kupoly(Ni).compose(shift));
                if (g.degree() > 0) {
                    out.emplace_back(g, mult);
                    rest = exact_quotient(rest, g);
                }
            }
            if (rest.degree() > 0) throw std::logic_error("Trager factorization left a remainder");
            break;
        }
    }
    return out;
}

Extension adjoin_root(const FieldPtr& K, const KUPoly& h0) {
    KUPoly h = h0.monic();
    if (h.degree() < 1) throw std::invalid_argument("adjoin_root: constant polynomial");
    Extension e;
    if (h.degree() == 1) {
        e.field = K;
        e.alpha = K ? FieldElem::generator(K) : FieldElem(1);
        e.beta = -h.c[0];
        return e;
    }
    if (!K) {
        e.field = make_field_auto_conjugation(to_rational_poly(h));
        e.beta = FieldElem::generator(e.field);
        e.alpha = FieldElem(1);
        return e;
    }
    for (int k : {1, -1, 2, -2, 3, -3, 4, 5, 6, 7, 8, 9, 10}) {
        UPoly<Rational> N = shifted_norm(h, K, k);
        if (gcd_q(N, N.derivative()).degree() > 0) continue;
        FieldPtr L = make_field_auto_conjugation(N.monic());
        FieldElem gamma = FieldElem::generator(L);
        // P(T) = sum_i h_i(T) (gamma - k T)^i over L
        KUPoly lin{gamma, FieldElem(Rational(-k))};
        KUPoly P, pw = KUPoly::constant(FieldElem(1));
        for (size_t i = 0; i < h.c.size(); ++i) {
            KUPoly ci = to_kupoly(UPoly<Rational>(h.c[i].coeffs()));
            P += ci * pw;
            pw = pw * lin;
        }
        KUPoly mL = to_kupoly(K->modulus());
        KUPoly g = gcd(mL, P);
        if (g.degree() != 1) continue;
        e.field = L;
        e.alpha = -g.c[0];
        e.beta = gamma - FieldElem(Rational(k)) * e.alpha;
        return e;
    }
    throw std::runtime_error("adjoin_root: no primitive element found");
}

std::vector<std::pair<FieldElem, int>> roots_in(const KUPoly& h, const FieldPtr& K) {
    std::vector<std::pair<FieldElem, int>> out;
    for (const auto& [f, m] : factor_over(h, K))
        if (f.degree() == 1) out.emplace_back(-f.c[0] / f.c[1], m);
    return out;
}

} // namespace branchdiv

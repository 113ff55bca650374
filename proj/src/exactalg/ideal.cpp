#include "branchdiv/exactalg/ideal.hpp"

#include "branchdiv/exactalg/linalg.hpp"

#include <algorithm>
#include <map>

namespace branchdiv {

bool MonomialOrder::less(Monomial a, Monomial b) const {
    if (pr_.empty()) return a < b;
    for (int v : pr_) {
        unsigned ea = exponent(a, v), eb = exponent(b, v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

IdealBasis::IdealBasis(std::vector<MPoly> gens, MonomialOrder order, bool groebner, int degree_limit)
    : gens_(std::move(gens)), order_(std::move(order)), groebner_(groebner), limit_(degree_limit) {
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(), [](const MPoly& g) { return g.is_zero(); }), gens_.end());
}

Monomial IdealBasis::leading_monomial(const MPoly& p) const {
    if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
    Monomial best = p.terms().front().first;
    for (const auto& [m, c] : p.terms())
        if (order_.less(best, m)) best = m;
    return best;
}

IdealBasis basis_if_coprime_leads(std::vector<MPoly> gens, MonomialOrder order) {
    IdealBasis probe(gens, order, false);
    const auto& g = probe.generators();
    bool coprime = true;
    for (size_t i = 0; i < g.size() && coprime; ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            Monomial a = probe.leading_monomial(g[i]), b = probe.leading_monomial(g[j]);
            for (int v = 0; v < kMaxVars; ++v)
                if (exponent(a, v) && exponent(b, v)) coprime = false;
        }
    return IdealBasis(probe.generators(), order, coprime);
}

IdealBasis truncated_basis(const std::vector<MPoly>& forms, int d, MonomialOrder order) {
    if (forms.empty()) return IdealBasis({}, order, true, d);
    const Vars& vars = forms.front().vars();
    std::vector<Monomial> monos = monomials_of_degree(static_cast<int>(vars->size()), d);
    std::sort(monos.begin(), monos.end(), [&](Monomial a, Monomial b) { return order.less(b, a); });
    std::map<Monomial, size_t> col;
    for (size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    Matrix<Rational> M(0, 0);
    for (const auto& f : forms) {
        if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != d)) throw std::invalid_argument("truncated_basis: form of the wrong degree");
        std::vector<Rational> row(monos.size(), Rational(0));
        for (const auto& [m, c] : f.terms()) row[col.at(m)] = c;
        M.append_row(row);
    }
    auto piv = rref(M);
    std::vector<MPoly> gens;
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<MPoly::Term> ts;
        for (size_t j = 0; j < monos.size(); ++j)
            if (sgn(M(r, j)) != 0) ts.emplace_back(monos[j], M(r, j));
        gens.emplace_back(vars, std::move(ts));
    }
    return IdealBasis(std::move(gens), order, true, d);
}

MPoly reduce_mod(const MPoly& p, const IdealBasis& I) {
    if (!I.is_groebner()) throw NotGroebnerError("reduce_mod: basis is not flagged as a Groebner basis");
    if (I.degree_limit() >= 0 && !p.is_zero() && (!p.is_homogeneous() || p.total_degree() > I.degree_limit()))
        throw NotGroebnerError("reduce_mod: input exceeds the degree through which the basis is certified");
    const auto& gens = I.generators();
    std::vector<Monomial> leads;
    std::vector<Rational> lcs;
    for (const auto& g : gens) {
        Monomial m = I.leading_monomial(g);
        leads.push_back(m);
        lcs.push_back(g.coefficient(m));
    }
    MPoly rem(p.vars());
    MPoly cur = p;
    while (!cur.is_zero()) {
        Monomial lm = I.leading_monomial(cur);
        Rational lc = cur.coefficient(lm);
        bool divided = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!divides(leads[i], lm)) continue;
            cur -= MPoly::monomial(p.vars(), lm - leads[i], lc / lcs[i]) * gens[i];
            divided = true;
            break;
        }
        if (!divided) {
            MPoly t = MPoly::monomial(p.vars(), lm, lc);
            rem += t;
            cur -= t;
        }
    }
    return rem;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(static_cast<size_t>(n), 0);
    // recursive enumeration
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            e[static_cast<size_t>(i)] = static_cast<unsigned>(left);
            out.push_back(make_monomial(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<size_t>(i)] = static_cast<unsigned>(k);
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, d);
    return out;
}

} // namespace branchdiv

#include "branchdiv/exactalg/mpoly.hpp"

namespace branchdiv {

Monomial make_monomial(const std::vector<unsigned>& e) {
    if (e.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("at most 8 variables");
    Monomial m = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
        m |= monomial_of(static_cast<int>(i), e[i]);
    }
    return m;
}

std::vector<unsigned> unpack(Monomial m, int nvars) {
    std::vector<unsigned> e(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[static_cast<size_t>(i)] = exponent(m, i);
    return e;
}

Vars make_vars(std::vector<std::string> names) {
    if (names.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("at most 8 variables");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

KPoly to_field(const MPoly& p) {
    return p.map_coeffs<FieldElem>([](const Rational& c) { return FieldElem(c); });
}

MPoly to_rational(const KPoly& p) {
    return p.map_coeffs<Rational>([](const FieldElem& c) { return c.rational_value(); });
}

KPoly shift(const KPoly& p, const std::vector<FieldElem>& a, int max_order) {
    const int n = p.nvars();
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("shift arity mismatch");
    std::vector<std::vector<FieldElem>> pw(static_cast<size_t>(n));
    auto power = [&](int i, unsigned e) -> const FieldElem& {
        auto& v = pw[static_cast<size_t>(i)];
        if (v.empty()) v.push_back(FieldElem(1));
        while (v.size() <= e) v.push_back(v.back() * a[static_cast<size_t>(i)]);
        return v[e];
    };
    std::vector<KPoly::Term> acc;
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e = unpack(m, n);
        // enumerate k_i <= e_i with sum k_i <= max_order
        std::vector<unsigned> k(static_cast<size_t>(n), 0);
        while (true) {
            unsigned tot = 0;
            for (auto x : k) tot += x;
            if (max_order < 0 || static_cast<int>(tot) <= max_order) {
                FieldElem coef = c;
                Monomial mk = 0;
                for (int i = 0; i < n; ++i) {
                    unsigned ei = e[static_cast<size_t>(i)], ki = k[static_cast<size_t>(i)];
                    if (ei == 0) continue;
                    if (ki < ei) {
                        const FieldElem& ap = power(i, ei - ki);
                        if (ap.is_zero()) {
                            coef = FieldElem();
                            break;
                        }
                        coef = coef * ap;
                    }
                    if (ki != 0 && ki != ei) coef = coef * FieldElem(Rational(binomial(ei, ki)));
                    mk |= monomial_of(i, ki);
                }
                if (!coef.is_zero()) acc.emplace_back(mk, coef);
            }
            int j = 0;
            for (; j < n; ++j) {
                if (k[static_cast<size_t>(j)] < e[static_cast<size_t>(j)]) {
                    ++k[static_cast<size_t>(j)];
                    break;
                }
                k[static_cast<size_t>(j)] = 0;
            }
            if (j == n) break;
        }
    }
    return KPoly(p.vars(), std::move(acc));
}

namespace {

void note_field(FieldPtr& F, const FieldElem& a) {
    if (a.is_rational()) return;
    if (!F) F = a.field();
    else if (!compatible(F, a.field())) throw FieldCompatibilityError("substitution mixes different number fields");
}

} // namespace

KPoly poly_eval_subst(const KPoly& p, const std::map<std::string, SubstTarget>& assignment) {
    FieldPtr F;
    for (const auto& [m, c] : p.terms()) note_field(F, c);
    std::vector<std::optional<KPoly>> images(static_cast<size_t>(p.nvars()));
    for (const auto& [name, target] : assignment) {
        const int i = p.index_of(name);
        if (const auto* a = std::get_if<FieldElem>(&target)) {
            note_field(F, *a);
            images[static_cast<size_t>(i)] = KPoly::constant(p.vars(), *a);
        } else {
            const KPoly& q = std::get<KPoly>(target);
            if (q.vars() != p.vars() && (!q.vars() || *q.vars() != *p.vars()))
                throw std::invalid_argument("substitution target uses a different variable table");
            for (const auto& [m, c] : q.terms()) note_field(F, c);
            images[static_cast<size_t>(i)] = KPoly(p.vars(), q.terms());
        }
    }
    return p.compose(p.vars(), images);
}

MPoly poly_eval_subst(const MPoly& p, const std::map<std::string, MPoly>& assignment) {
    std::vector<std::optional<MPoly>> images(static_cast<size_t>(p.nvars()));
    for (const auto& [name, q] : assignment) {
        if (q.vars() != p.vars() && (!q.vars() || *q.vars() != *p.vars()))
            throw std::invalid_argument("substitution target uses a different variable table");
        images[static_cast<size_t>(p.index_of(name))] = MPoly(p.vars(), q.terms());
    }
    return p.compose(p.vars(), images);
}

} // namespace branchdiv

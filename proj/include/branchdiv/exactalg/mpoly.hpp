#pragma once

#include "branchdiv/exactalg/number_field.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace branchdiv {

// Exponent vectors packed eight bits per variable, variable 0 in the top byte,
// so that integer order on the packed word is lex order with var0 > var1 > ...
using Monomial = std::uint64_t;
constexpr int kMaxVars = 8;
constexpr unsigned kMaxExponent = 255;

inline unsigned exponent(Monomial m, int i) { return static_cast<unsigned>((m >> (8 * (7 - i))) & 0xffu); }
inline Monomial monomial_of(int i, unsigned e) { return static_cast<Monomial>(e) << (8 * (7 - i)); }
inline unsigned monomial_degree(Monomial m) {
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(m, i);
    return d;
}
inline bool divides(Monomial a, Monomial b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (exponent(a, i) > exponent(b, i)) return false;
    return true;
}
Monomial make_monomial(const std::vector<unsigned>& e);
std::vector<unsigned> unpack(Monomial m, int nvars);

using Vars = std::shared_ptr<const std::vector<std::string>>;
Vars make_vars(std::vector<std::string> names);

struct UnknownVariableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;
    explicit Polynomial(Vars v) : vars_(std::move(v)) {
        if (!vars_ || vars_->size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("at most 8 variables");
    }
    Polynomial(Vars v, std::vector<Term> terms) : Polynomial(std::move(v)) {
        t_ = std::move(terms);
        normalize();
    }

    static Polynomial constant(Vars v, const K& a) {
        Polynomial p(std::move(v));
        if (!detail::coeff_is_zero(a)) p.t_.emplace_back(Monomial{0}, a);
        return p;
    }
    static Polynomial variable(Vars v, int i) {
        Polynomial p(std::move(v));
        p.check_var(i);
        p.t_.emplace_back(monomial_of(i, 1), K(1));
        return p;
    }
    static Polynomial variable(Vars v, const std::string& name) {
        Polynomial p(v);
        return variable(v, p.index_of(name));
    }
    static Polynomial monomial(Vars v, Monomial m, const K& a) {
        Polynomial p(std::move(v));
        if (!detail::coeff_is_zero(a)) p.t_.emplace_back(m, a);
        return p;
    }

    const Vars& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    K constant_term() const { return (!t_.empty() && t_.back().first == 0) ? t_.back().second : K(0); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if ((*vars_)[static_cast<size_t>(i)] == name) return i;
        throw UnknownVariableError("unknown variable '" + name + "'");
    }
    void check_var(int i) const {
        if (i < 0 || i >= nvars()) throw UnknownVariableError("variable index out of range");
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(monomial_degree(m)));
        return d;
    }
    int degree(int i) const {
        check_var(i);
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(exponent(m, i)));
        return d;
    }
    int min_total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) {
            int e = static_cast<int>(monomial_degree(m));
            if (d < 0 || e < d) d = e;
        }
        return d;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        unsigned d = monomial_degree(t_[0].first);
        for (const auto& [m, c] : t_)
            if (monomial_degree(m) != d) return false;
        return true;
    }

    const Term& lead() const { return t_.front(); }

    K coefficient(Monomial m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& a, Monomial b) { return a.first > b; });
        return (it != t_.end() && it->first == m) ? it->second : K(0);
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, true); }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, true); }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& [m, c] : r.t_) c = K(0) - c;
        return r;
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) {
        Polynomial r(a.vars_);
        if (detail::coeff_is_zero(s)) return r;
        r.t_.reserve(a.t_.size());
        for (const auto& [m, c] : a.t_) {
            K v = s * c;
            if (!detail::coeff_is_zero(v)) r.t_.emplace_back(m, v);
        }
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        Polynomial r(a.vars_);
        if (a.t_.empty() || b.t_.empty()) return r;
        check_exponents(a, b);
        if (a.t_.size() == 1 || b.t_.size() == 1) {
            const Polynomial& s = a.t_.size() == 1 ? a : b;
            const Polynomial& o = a.t_.size() == 1 ? b : a;
            r.t_.reserve(o.t_.size());
            for (const auto& [m, c] : o.t_) r.t_.emplace_back(m + s.t_[0].first, s.t_[0].second * c);
            r.drop_zeros();
            return r;
        }
        std::vector<Term> acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) acc.emplace_back(ma + mb, ca * cb);
        r.t_ = std::move(acc);
        r.normalize();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(vars_, K(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    Polynomial differentiate(int i) const {
        check_var(i);
        Polynomial r(vars_);
        for (const auto& [m, c] : t_) {
            unsigned e = exponent(m, i);
            if (e == 0) continue;
            r.t_.emplace_back(m - monomial_of(i, 1), K(static_cast<int>(e)) * c);
        }
        r.drop_zeros();
        return r;
    }
    Polynomial differentiate(const std::string& name) const { return differentiate(index_of(name)); }

    // Terms of total degree <= n.
    Polynomial truncate(int n) const {
        Polynomial r(vars_);
        for (const auto& t : t_)
            if (static_cast<int>(monomial_degree(t.first)) <= n) r.t_.push_back(t);
        return r;
    }
    Polynomial homogeneous_part(int d) const {
        Polynomial r(vars_);
        for (const auto& t : t_)
            if (static_cast<int>(monomial_degree(t.first)) == d) r.t_.push_back(t);
        return r;
    }

    // Coefficients as a polynomial in variable i: result[k] has no occurrence of i.
    std::vector<Polynomial> coeffs_in(int i) const {
        check_var(i);
        int d = degree(i);
        std::vector<Polynomial> out(static_cast<size_t>(std::max(d, -1) + 1), Polynomial(vars_));
        for (const auto& [m, c] : t_) {
            unsigned e = exponent(m, i);
            out[e].t_.emplace_back(m - monomial_of(i, e), c);
        }
        for (auto& p : out) p.normalize();
        return out;
    }
    static Polynomial from_coeffs_in(const Vars& v, int i, const std::vector<Polynomial>& cs) {
        Polynomial r(v);
        for (size_t e = 0; e < cs.size(); ++e) {
            if (cs[e].is_zero()) continue;
            r += cs[e] * monomial(v, monomial_of(i, static_cast<unsigned>(e)), K(1));
        }
        return r;
    }

    // Substitute images for variables (nullopt keeps the variable). Images live in `target`.
    Polynomial<K> compose(const Vars& target, const std::vector<std::optional<Polynomial<K>>>& images) const {
        if (static_cast<int>(images.size()) != nvars()) throw std::invalid_argument("substitution arity mismatch");
        std::vector<Polynomial<K>> img;
        for (int i = 0; i < nvars(); ++i) {
            if (images[static_cast<size_t>(i)]) img.push_back(*images[static_cast<size_t>(i)]);
            else {
                // keep variable: must exist in target with the same name
                Polynomial<K> probe(target);
                img.push_back(Polynomial<K>::variable(target, probe.index_of((*vars_)[static_cast<size_t>(i)])));
            }
        }
        std::vector<std::vector<Polynomial<K>>> powers(static_cast<size_t>(nvars()));
        Polynomial<K> r(target);
        for (const auto& [m, c] : t_) {
            Polynomial<K> term = Polynomial<K>::constant(target, c);
            for (int i = 0; i < nvars(); ++i) {
                unsigned e = exponent(m, i);
                if (!e) continue;
                auto& pw = powers[static_cast<size_t>(i)];
                if (pw.empty()) pw.push_back(Polynomial<K>::constant(target, K(1)));
                while (pw.size() <= e) pw.push_back(pw.back() * img[static_cast<size_t>(i)]);
                term = term * pw[e];
            }
            r += term;
        }
        return r;
    }

    // Same-ring substitution of some variables.
    Polynomial subst(const std::vector<std::pair<int, Polynomial>>& assignment) const {
        std::vector<std::optional<Polynomial>> images(static_cast<size_t>(nvars()));
        for (const auto& [i, p] : assignment) {
            check_var(i);
            if (p.nvars() != nvars()) throw std::invalid_argument("substitution ring mismatch");
            images[static_cast<size_t>(i)] = p;
        }
        return compose(vars_, images);
    }

    // Total evaluation.
    K eval(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != nvars()) throw std::invalid_argument("evaluation arity mismatch");
        std::vector<std::vector<K>> powers(point.size());
        K r(0);
        for (const auto& [m, c] : t_) {
            K term = c;
            for (int i = 0; i < nvars(); ++i) {
                unsigned e = exponent(m, i);
                if (!e) continue;
                auto& pw = powers[static_cast<size_t>(i)];
                if (pw.empty()) pw.push_back(K(1));
                while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<size_t>(i)]);
                term = term * pw[e];
            }
            r = r + term;
        }
        return r;
    }

    template <class L, class F>
    Polynomial<L> map_coeffs(F&& f) const {
        Polynomial<L> r(vars_);
        std::vector<typename Polynomial<L>::Term> ts;
        ts.reserve(t_.size());
        for (const auto& [m, c] : t_) ts.emplace_back(m, f(c));
        return Polynomial<L>(vars_, std::move(ts));
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            bool unit = cs == "1";
            if (m == 0) os << (compound ? "(" + cs + ")" : cs);
            else {
                if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
                bool firstv = true;
                for (int i = 0; i < nvars(); ++i) {
                    unsigned e = exponent(m, i);
                    if (!e) continue;
                    if (!firstv) os << "*";
                    os << (*vars_)[static_cast<size_t>(i)];
                    if (e > 1) os << "^" << e;
                    firstv = false;
                }
            }
            first = false;
        }
        return os.str();
    }

    // Internal: restore invariants after raw edits.
    void normalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().first == t.first) out.back().second = out.back().second + t.second;
            else out.push_back(std::move(t));
        }
        t_ = std::move(out);
        drop_zeros();
    }

private:
    Vars vars_;
    std::vector<Term> t_;

    void drop_zeros() {
        t_.erase(std::remove_if(t_.begin(), t_.end(), [](const Term& t) { return detail::coeff_is_zero(t.second); }), t_.end());
    }
    static std::string coeff_str(const Rational& c) { return to_string(c); }
    static std::string coeff_str(const FieldElem& c) { return c.str(); }

    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ == b.vars_) return;
        if (!a.vars_ || !b.vars_ || *a.vars_ != *b.vars_) throw std::invalid_argument("polynomials live in different rings");
    }
    static void check_exponents(const Polynomial& a, const Polynomial& b) {
        for (int i = 0; i < a.nvars(); ++i) {
            unsigned da = 0, db = 0;
            for (const auto& t : a.t_) da = std::max(da, exponent(t.first, i));
            for (const auto& t : b.t_) db = std::max(db, exponent(t.first, i));
            if (da + db > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
        }
    }
    static Polynomial add(const Polynomial& a, const Polynomial& b, bool subtract) {
        if (!a.vars_) return subtract ? -b : b;
        if (!b.vars_) return a;
        check_same(a, b);
        Polynomial r(a.vars_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first > b.t_[j].first)) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first > a.t_[i].first) {
                r.t_.emplace_back(b.t_[j].first, subtract ? K(K(0) - b.t_[j].second) : K(b.t_[j].second));
                ++j;
            } else {
                K v = subtract ? K(a.t_[i].second - b.t_[j].second) : K(a.t_[i].second + b.t_[j].second);
                if (!detail::coeff_is_zero(v)) r.t_.emplace_back(a.t_[i].first, v);
                ++i;
                ++j;
            }
        }
        return r;
    }
};

using MPoly = Polynomial<Rational>;
using KPoly = Polynomial<FieldElem>;

KPoly to_field(const MPoly& p);
// Requires all coefficients rational.
MPoly to_rational(const KPoly& p);

// Exact division in the polynomial ring; nullopt if b does not divide a.
template <class K>
std::optional<Polynomial<K>> divide_exact(Polynomial<K> a, const Polynomial<K>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial<K> q(a.vars());
    const auto& [lm, lc] = b.lead();
    K inv = inverse(lc);
    while (!a.is_zero()) {
        const auto [am, ac] = a.lead();
        if (!divides(lm, am)) return std::nullopt;
        Polynomial<K> t = Polynomial<K>::monomial(a.vars(), am - lm, ac * inv);
        q += t;
        a -= t * b;
    }
    return q;
}

// Univariate view in variable i with only that variable present.
template <class K>
UPoly<K> to_upoly(const Polynomial<K>& p, int i) {
    std::vector<K> c(static_cast<size_t>(std::max(p.degree(i), -1) + 1), K(0));
    for (const auto& [m, a] : p.terms()) {
        if (m != monomial_of(i, exponent(m, i))) throw std::invalid_argument("polynomial is not univariate in the requested variable");
        c[exponent(m, i)] = a;
    }
    return UPoly<K>(std::move(c));
}

template <class K>
Polynomial<K> from_upoly(const Vars& v, int i, const UPoly<K>& u) {
    std::vector<typename Polynomial<K>::Term> ts;
    for (size_t e = 0; e < u.c.size(); ++e)
        if (!is_zero(u.c[e])) ts.emplace_back(monomial_of(i, static_cast<unsigned>(e)), u.c[e]);
    return Polynomial<K>(v, std::move(ts));
}

// p(x + a): Taylor shift of all variables, keeping terms of total degree <= max_order (-1: all).
KPoly shift(const KPoly& p, const std::vector<FieldElem>& a, int max_order = -1);

// Partial substitution by variable name. Polynomial targets must share p's variable table;
// unassigned variables are kept. Throws FieldCompatibilityError when coefficients and
// targets live in different number fields, UnknownVariableError for undeclared names.
using SubstTarget = std::variant<KPoly, FieldElem>;
KPoly poly_eval_subst(const KPoly& p, const std::map<std::string, SubstTarget>& assignment);
MPoly poly_eval_subst(const MPoly& p, const std::map<std::string, MPoly>& assignment);

} // namespace branchdiv

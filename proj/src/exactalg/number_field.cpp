#include "branchdiv/exactalg/number_field.hpp"

#include "branchdiv/exactalg/linalg.hpp"

#include <sstream>

namespace branchdiv {

NumberField::NumberField(UPoly<Rational> m, std::optional<std::vector<Rational>> conjugation)
    : m_(std::move(m)), conj_(std::move(conjugation)) {
    if (m_.degree() < 1) throw std::invalid_argument("minimal polynomial must have positive degree");
    if (m_.lead() != 1) throw std::invalid_argument("minimal polynomial must be monic");
    if (gcd(m_, m_.derivative()).degree() > 0) throw std::invalid_argument("minimal polynomial must be squarefree");
    if (conj_) {
        conj_->resize(static_cast<size_t>(degree()), Rational(0));
        // the image must be a root of m and the map must be an involution
        UPoly<Rational> img(*conj_);
        UPoly<Rational> check = m_.compose(img) % m_;
        if (!check.is_zero()) throw std::invalid_argument("declared conjugation is not a field automorphism");
        UPoly<Rational> twice = img.compose(img) % m_;
        if (twice != UPoly<Rational>::x() && !(degree() == 1)) throw std::invalid_argument("declared conjugation is not an involution");
    }
}

std::vector<Rational> NumberField::reduce(const UPoly<Rational>& p) const {
    UPoly<Rational> r = p.degree() >= degree() ? p % m_ : p;
    std::vector<Rational> v = r.c;
    v.resize(static_cast<size_t>(degree()), Rational(0));
    return v;
}

UPoly<Rational> NumberField::lift(const std::vector<Rational>& v) const { return UPoly<Rational>(v); }

FieldPtr make_field(UPoly<Rational> m, std::optional<std::vector<Rational>> conjugation) {
    return std::make_shared<const NumberField>(std::move(m), std::move(conjugation));
}

FieldPtr make_field_auto_conjugation(UPoly<Rational> m) {
    if (m.degree() == 2) {
        Rational disc = m.c[1] * m.c[1] - 4 * m.c[0];
        if (disc < 0) return make_field(std::move(m), std::vector<Rational>{-m.c[1], Rational(-1)});
    }
    return make_field(std::move(m));
}

FieldElem::FieldElem(FieldPtr F, std::vector<Rational> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    if (F_ && static_cast<int>(c_.size()) > F_->degree()) {
        c_ = F_->reduce(UPoly<Rational>(c_));
    } else if (!F_ && c_.size() > 1) {
        trim();
        if (c_.size() > 1) throw FieldCompatibilityError("non-rational coordinates without a field");
    }
    trim();
}

FieldElem FieldElem::generator(const FieldPtr& F) {
    if (F->degree() == 1) return FieldElem(F, {-F->modulus().c[0]});
    return FieldElem(F, {Rational(0), Rational(1)});
}

std::vector<Rational> FieldElem::dense() const {
    std::vector<Rational> v = c_;
    v.resize(static_cast<size_t>(F_ ? F_->degree() : 1), Rational(0));
    return v;
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

bool compatible(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || a == b) return true;
    return a->same_as(*b);
}

FieldPtr FieldElem::common(const FieldElem& a, const FieldElem& b) {
    if (a.F_ == b.F_) return a.F_;
    if (!a.F_) {
        if (!b.is_rational() && !b.F_) throw FieldCompatibilityError("field mismatch");
        return a.is_rational() ? b.F_ : (throw FieldCompatibilityError("field mismatch"), FieldPtr{});
    }
    if (!b.F_) {
        if (!b.is_rational()) throw FieldCompatibilityError("field mismatch");
        return a.F_;
    }
    if (a.F_->same_as(*b.F_)) return a.F_;
    if (a.is_rational() && b.is_rational()) return a.F_;
    throw FieldCompatibilityError("elements live in different number fields");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.F_ = FieldElem::common(a, b);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.F_ = FieldElem::common(a, b);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

FieldElem operator-(const FieldElem& a) {
    FieldElem r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    FieldElem r;
    r.F_ = FieldElem::common(a, b);
    if (a.c_.empty() || b.c_.empty()) return r;
    if (a.c_.size() == 1 || b.c_.size() == 1) {
        const FieldElem& s = a.c_.size() == 1 ? a : b;
        const FieldElem& o = a.c_.size() == 1 ? b : a;
        r.c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = s.c_[0] * o.c_[i];
        r.trim();
        return r;
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& m = r.F_->modulus().c;
    const size_t d = m.size() - 1;
    for (size_t k = prod.size(); k-- > d;) {
        if (sgn(prod[k]) == 0) continue;
        Rational t = prod[k];
        for (size_t j = 0; j < d; ++j) prod[k - d + j] -= t * m[j];
        prod[k] = 0;
    }
    if (prod.size() > d) prod.resize(d);
    r.c_ = std::move(prod);
    r.trim();
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    if (is_rational()) {
        FieldElem r;
        r.F_ = F_;
        r.c_ = {Rational(1) / c_[0]};
        return r;
    }
    UPoly<Rational> g, s, t;
    xgcd(as_poly(), F_->modulus(), g, s, t);
    if (g.degree() != 0) throw std::domain_error("element is a zero divisor: modulus is reducible");
    return FieldElem(F_, s.c);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.size() > 1 && !compatible(a.F_, b.F_)) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

FieldElem FieldElem::conj() const {
    if (is_rational()) return *this;
    if (!F_->conjugation()) throw std::domain_error("field has no declared conjugation");
    FieldElem img(F_, *F_->conjugation());
    return embed(*this, img);
}

namespace {

Matrix<Rational> multiplication_matrix(const FieldElem& a) {
    const int d = a.field() ? a.field()->degree() : 1;
    Matrix<Rational> M(static_cast<size_t>(d), static_cast<size_t>(d));
    FieldElem basis = a.field() ? FieldElem(a.field(), {Rational(1)}) : FieldElem(1);
    FieldElem tgen = a.field() ? FieldElem::generator(a.field()) : FieldElem(1);
    for (int j = 0; j < d; ++j) {
        FieldElem col = a * basis;
        for (int i = 0; i < d; ++i) M(static_cast<size_t>(i), static_cast<size_t>(j)) = col.coeff(static_cast<size_t>(i));
        basis = basis * tgen;
    }
    return M;
}

} // namespace

Rational FieldElem::trace() const {
    Matrix<Rational> M = multiplication_matrix(*this);
    Rational t = 0;
    for (size_t i = 0; i < M.rows(); ++i) t += M(i, i);
    return t;
}

Rational FieldElem::norm() const { return determinant(multiplication_matrix(*this)); }

UPoly<Rational> FieldElem::charpoly() const { return characteristic_polynomial(multiplication_matrix(*this)); }

UPoly<Rational> FieldElem::minpoly() const {
    UPoly<Rational> cp = charpoly();
    UPoly<Rational> sf = squarefree_part(cp);
    return sf;
}

std::string FieldElem::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        Rational abs_a = abs(a);
        if (i == 0) os << to_string(abs_a);
        else {
            if (abs_a != 1) os << to_string(abs_a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

FieldElem eval_at(const UPoly<Rational>& p, const FieldElem& x) {
    FieldElem r;
    for (size_t i = p.c.size(); i-- > 0;) r = r * x + FieldElem(p.c[i]);
    return r;
}

FieldElem embed(const FieldElem& a, const FieldElem& generator_image) {
    return eval_at(a.as_poly(), generator_image);
}

} // namespace branchdiv

#pragma once

#include "branchdiv/exactalg/upoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace branchdiv {

class FieldElem;

// Q[t]/(m(t)) with m monic, irreducible over Q.
class NumberField {
public:
    // Throws if m is not monic of degree >= 1 or not squarefree.
    explicit NumberField(UPoly<Rational> m, std::optional<std::vector<Rational>> conjugation = std::nullopt);

    int degree() const { return m_.degree(); }
    const UPoly<Rational>& modulus() const { return m_; }
    // Image of t under the declared conjugation, power-basis coordinates.
    const std::optional<std::vector<Rational>>& conjugation() const { return conj_; }
    bool same_as(const NumberField& o) const { return m_ == o.m_; }

    // Reduce a polynomial in t modulo m; result has length degree().
    std::vector<Rational> reduce(const UPoly<Rational>& p) const;
    UPoly<Rational> lift(const std::vector<Rational>& v) const;

private:
    UPoly<Rational> m_;
    std::optional<std::vector<Rational>> conj_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(UPoly<Rational> m, std::optional<std::vector<Rational>> conjugation = std::nullopt);

// Quadratic fields with non-real roots get the declared conjugation t -> -t - m1.
FieldPtr make_field_auto_conjugation(UPoly<Rational> m);

// Element of a number field, or of Q when field() is null.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(int v) : c_{Rational(v)} { trim(); }
    FieldElem(const Rational& q) : c_{q} { trim(); }
    FieldElem(FieldPtr F, std::vector<Rational> coeffs);

    static FieldElem generator(const FieldPtr& F);

    const FieldPtr& field() const { return F_; }
    // Power-basis coordinates; trailing zeros trimmed.
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    std::vector<Rational> dense() const;

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const;

    FieldElem conj() const;
    Rational trace() const;
    Rational norm() const;
    UPoly<Rational> charpoly() const;
    UPoly<Rational> minpoly() const;
    UPoly<Rational> as_poly() const { return UPoly<Rational>(c_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inv() const;

    std::string str(const std::string& var = "t") const;

private:
    FieldPtr F_;
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    static FieldPtr common(const FieldElem& a, const FieldElem& b);
};

inline bool is_zero(const FieldElem& a) { return a.is_zero(); }
inline FieldElem inverse(const FieldElem& a) { return a.inv(); }

// Same field, or one side rational.
bool compatible(const FieldPtr& a, const FieldPtr& b);

// Evaluate p (over Q) at an element.
FieldElem eval_at(const UPoly<Rational>& p, const FieldElem& x);

// Image of a in another field given the image of the generator.
FieldElem embed(const FieldElem& a, const FieldElem& generator_image);

} // namespace branchdiv

#include "branchdiv/exactalg/closed_point.hpp"

#include "branchdiv/exactalg/factor.hpp"
#include "branchdiv/exactalg/linalg.hpp"

namespace branchdiv {

namespace {

FieldPtr common_field(const std::vector<FieldElem>& coords) {
    FieldPtr F;
    for (const auto& c : coords) {
        if (c.is_rational()) continue;
        if (!F) F = c.field();
        else if (!compatible(F, c.field())) throw FieldCompatibilityError("coordinates live in different fields");
    }
    return F;
}

struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<size_t> pivots;
    // returns true if v was independent (and adds it)
    bool insert(std::vector<Rational> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational f = v[pivots[r]];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        size_t p = 0;
        while (p < v.size() && sgn(v[p]) == 0) ++p;
        if (p == v.size()) return false;
        Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational f = rows[r][p];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

std::vector<Rational> dense_in(const FieldElem& a, int d) {
    std::vector<Rational> v(static_cast<size_t>(d), Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] = a.coeffs()[i];
    return v;
}

int minpoly_degree(const FieldElem& a) { return a.minpoly().degree(); }

} // namespace

int generated_degree(const std::vector<FieldElem>& coords) {
    FieldPtr F = common_field(coords);
    if (!F) return 1;
    const int d = F->degree();
    Echelon E;
    std::vector<FieldElem> queue{FieldElem(F, {Rational(1)})};
    E.insert(dense_in(queue[0], d));
    for (size_t q = 0; q < queue.size(); ++q) {
        for (const auto& c : coords) {
            if (c.is_rational()) continue;
            FieldElem w = queue[q] * c;
            if (E.insert(dense_in(w, d))) queue.push_back(w);
        }
        if (static_cast<int>(queue.size()) == d) break;
    }
    return static_cast<int>(E.rows.size());
}

ClosedPoint canonical_affine(const std::vector<FieldElem>& coords) {
    ClosedPoint p;
    FieldPtr F = common_field(coords);
    const int k = generated_degree(coords);
    if (k == 1) {
        for (const auto& c : coords) p.coords.emplace_back(c.rational_value());
        return p;
    }
    const int d = F->degree();
    // candidate primitive elements in a fixed order
    std::vector<FieldElem> cands;
    const size_t n = coords.size();
    for (size_t j = 0; j < n; ++j) cands.push_back(coords[j]);
    for (int m = 1; m <= 6; ++m)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) cands.push_back(coords[i] + FieldElem(Rational(m)) * coords[j]);
    for (int m = 2; m <= 12; ++m) {
        FieldElem acc(0), w(1);
        for (size_t j = 0; j < n; ++j) {
            acc = acc + w * coords[j];
            w = w * FieldElem(Rational(m));
        }
        cands.push_back(acc);
    }
    for (const auto& theta : cands) {
        if (theta.is_rational() || minpoly_degree(theta) != k) continue;
        UPoly<Rational> mp = theta.minpoly();
        Matrix<Rational> A(static_cast<size_t>(d), static_cast<size_t>(k));
        FieldElem pw(F, {Rational(1)});
        for (int j = 0; j < k; ++j) {
            auto v = dense_in(pw, d);
            for (int i = 0; i < d; ++i) A(static_cast<size_t>(i), static_cast<size_t>(j)) = v[static_cast<size_t>(i)];
            pw = pw * theta;
        }
        FieldPtr G = make_field_auto_conjugation(mp);
        bool ok = true;
        std::vector<FieldElem> out;
        for (const auto& c : coords) {
            auto sol = solve(A, dense_in(c, d));
            if (!sol) {
                ok = false;
                break;
            }
            out.emplace_back(G, *sol);
        }
        if (!ok) continue;
        p.field = G;
        p.coords = std::move(out);
        return p;
    }
    throw std::runtime_error("canonical_affine: no primitive element among candidates");
}

ClosedPoint canonical_projective(const std::vector<FieldElem>& coords) {
    size_t i = 0;
    while (i < coords.size() && coords[i].is_zero()) ++i;
    if (i == coords.size()) throw std::invalid_argument("projective point with all coordinates zero");
    FieldElem inv = coords[i].inv();
    std::vector<FieldElem> scaled;
    for (const auto& c : coords) scaled.push_back(c * inv);
    return canonical_affine(scaled);
}

UPoly<Rational> ClosedPoint::minpoly() const {
    if (!field) return UPoly<Rational>::x();
    return field->modulus();
}

int ClosedPoint::real_points() const {
    if (!field) return 1;
    return count_real_roots(field->modulus());
}

bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.degree() != b.degree()) return false;
    if (a.field && !(a.field->modulus() == b.field->modulus())) return false;
    if (a.coords.size() != b.coords.size()) return false;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i].coeffs() != b.coords[i].coeffs()) return false;
    return true;
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.field && a.field->modulus() != b.field->modulus()) return poly_less(a.field->modulus(), b.field->modulus());
    for (size_t i = 0; i < std::min(a.coords.size(), b.coords.size()); ++i) {
        auto x = a.coords[i].dense(), y = b.coords[i].dense();
        size_t len = std::max(x.size(), y.size());
        x.resize(len, Rational(0));
        y.resize(len, Rational(0));
        for (size_t j = len; j-- > 0;)
            if (x[j] != y[j]) return x[j] < y[j];
    }
    return a.coords.size() < b.coords.size();
}

std::vector<FieldElem> conjugate(const std::vector<FieldElem>& coords) {
    std::vector<FieldElem> out;
    for (const auto& c : coords) out.push_back(c.conj());
    return out;
}

} // namespace branchdiv

#include "branchdiv/exactalg/binary_form.hpp"

#include "branchdiv/exactalg/factor.hpp"

namespace branchdiv {

std::vector<BinaryRoot> binary_form_roots(const MPoly& b, int vx, int vy) {
    if (b.is_zero()) throw std::invalid_argument("binary form is zero");
    if (!b.is_homogeneous()) throw std::invalid_argument("binary form is not homogeneous");
    const int n = b.total_degree();
    if (n > 4) throw UnsupportedDegreeError("binary form of degree " + std::to_string(n) + " exceeds 4");
    std::vector<Rational> c(static_cast<size_t>(n + 1), Rational(0));
    for (const auto& [m, a] : b.terms()) {
        for (int i = 0; i < b.nvars(); ++i)
            if (i != vx && i != vy && exponent(m, i) != 0) throw std::invalid_argument("binary form involves other variables");
        c[exponent(m, vx)] = a;
    }
    UPoly<Rational> p(c); // b(x, 1)
    std::vector<BinaryRoot> out;
    if (p.degree() < n) {
        BinaryRoot r;
        r.x = FieldElem(1);
        r.y = FieldElem(0);
        r.multiplicity = n - p.degree();
        out.push_back(r);
    }
    for (const auto& [f, m] : factor_q(p)) {
        if (f.degree() == 1) {
            BinaryRoot r;
            r.x = FieldElem(-f.c[0]);
            r.y = FieldElem(1);
            r.multiplicity = m;
            out.push_back(r);
            continue;
        }
        FieldPtr K = make_field_auto_conjugation(f);
        FieldElem t = FieldElem::generator(K);
        if (f.degree() == 2) {
            BinaryRoot r1, r2;
            r1.x = t;
            r2.x = FieldElem(K, {-f.c[1], Rational(-1)});
            r1.y = r2.y = FieldElem(1);
            r1.multiplicity = r2.multiplicity = m;
            if (K->conjugation()) {
                r1.conjugate = out.size() + 1;
                r2.conjugate = out.size();
            }
            out.push_back(r1);
            out.push_back(r2);
            continue;
        }
        BinaryRoot r;
        r.x = t;
        r.y = FieldElem(1);
        r.multiplicity = m;
        r.orbit_size = f.degree();
        out.push_back(r);
    }
    return out;
}

MPoly expand_roots(const std::vector<BinaryRoot>& roots, const Vars& vars, int vx, int vy) {
    // Work over the field of each root; orbits contribute their minimal polynomial.
    MPoly acc = MPoly::constant(vars, Rational(1));
    MPoly X = MPoly::variable(vars, vx), Y = MPoly::variable(vars, vy);
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        const auto& r = roots[i];
        MPoly factor(vars);
        if (r.x.is_rational() && r.y.is_rational()) {
            factor = r.y.rational_value() * X - r.x.rational_value() * Y;
        } else {
            // y = 1 and x generates a field: homogenized minimal polynomial
            UPoly<Rational> mp = r.x.minpoly();
            for (int k = 0; k <= mp.degree(); ++k)
                factor += mp.c[static_cast<size_t>(k)] * X.pow(static_cast<unsigned>(k)) * Y.pow(static_cast<unsigned>(mp.degree() - k));
            // the conjugate root belongs to the same orbit factor
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (!roots[j].x.is_rational() && roots[j].x.minpoly() == mp) used[j] = true;
        }
        for (int e = 0; e < r.multiplicity; ++e) acc = acc * factor;
    }
    return acc;
}

} // namespace branchdiv

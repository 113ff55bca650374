#include "branchdiv/quadric/quadric.hpp"

#include "branchdiv/exactalg/ideal.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace branchdiv::quadric {

using branch::q_index;
using scroll::z;

MPoly quadric_form(const QuadVec& v) {
    MPoly r(scroll::projective_vars());
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) r += v[q_index(i, j)] * z(i) * z(j);
    return r;
}

QuadVec quadric_coeffs(const MPoly& q) {
    QuadVec v{};
    for (const auto& [m, c] : q.terms()) {
        if (monomial_degree(m) != 2) throw std::invalid_argument("not a quadratic form");
        int idx[2], n = 0;
        for (int i = 0; i < 5; ++i)
            for (unsigned e = 0; e < exponent(m, i); ++e) idx[n++] = i;
        v[q_index(idx[0], idx[1])] = c;
    }
    return v;
}

namespace {

std::vector<Rational> as_row(const QuadVec& v) { return {v.begin(), v.end()}; }

QuadVec as_vec(const std::vector<Rational>& r) {
    QuadVec v{};
    for (size_t i = 0; i < 15; ++i) v[i] = r[i];
    return v;
}

} // namespace

Matrix<Rational> containment_conditions(const branch::DoubleCurve& curve) {
    // degree-2 part of the ideal: linear generators times variables, plus the quadrics
    std::vector<MPoly> forms;
    for (const auto& g : curve.generators) {
        if (g.total_degree() == 1)
            for (int i = 0; i < 5; ++i) forms.push_back(g * z(i));
        else if (g.total_degree() == 2) forms.push_back(g);
        else throw std::invalid_argument("curve generators must be linear or quadratic");
    }
    const IdealBasis I = truncated_basis(forms, 2);
    // columns: the 15 monomials; rows: monomials of the residuals
    std::vector<MPoly> residual;
    std::vector<Monomial> support;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            MPoly r = reduce_mod(z(i) * z(j), I);
            for (const auto& t : r.terms())
                if (std::find(support.begin(), support.end(), t.first) == support.end()) support.push_back(t.first);
            residual.push_back(std::move(r));
        }
    std::sort(support.begin(), support.end(), std::greater<>());
    Matrix<Rational> M(support.size(), 15);
    for (size_t k = 0; k < 15; ++k)
        for (size_t r = 0; r < support.size(); ++r) M(r, k) = residual[k].coefficient(support[r]);
    return M;
}

bool QuadricSpace::contains(const QuadVec& v) const {
    Matrix<Rational> M(0, 0);
    for (const auto& b : basis) M.append_row(as_row(b));
    const size_t r0 = basis.empty() ? 0 : rank(M);
    M.append_row(as_row(v));
    return rank(M) == r0;
}

QuadricSpace kernel_space(const Matrix<Rational>& conditions) {
    QuadricSpace S;
    for (const auto& k : kernel(conditions)) S.basis.push_back(as_vec(k));
    return S;
}

namespace {

Matrix<Rational> stack(const std::vector<Matrix<Rational>>& parts, int skip) {
    Matrix<Rational> M(0, 0);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        for (size_t r = 0; r < parts[i].rows(); ++r) M.append_row(parts[i].row(r));
    }
    if (M.rows() == 0) return Matrix<Rational>(1, 15);
    return M;
}

} // namespace

FitReport fit_span(const std::vector<branch::DoubleCurve>& curves, const MPoly& Q) {
    std::vector<Matrix<Rational>> parts;
    for (const auto& c : curves) parts.push_back(containment_conditions(c));
    FitReport rep;
    const Matrix<Rational> all = stack(parts, -1);
    rep.condition_rank = static_cast<int>(rank(all));
    rep.space = kernel_space(all);
    rep.generic = rep.space.dimension() == 2;
    rep.contains_scroll = rep.space.contains(quadric_coeffs(scroll::scroll_form()));
    rep.contains_q = rep.space.contains(quadric_coeffs(Q));
    for (int i = 0; i < 5 && i < static_cast<int>(parts.size()); ++i)
        rep.without_curve[static_cast<size_t>(i)] = kernel_space(stack(parts, i)).dimension();
    return rep;
}

FitReport fit_span(const branch::BranchSpec& spec) { return fit_span(branch::double_curves(spec), spec.q_form()); }

bool same_mod_scroll(const MPoly& A, const MPoly& B) {
    const QuadVec g = quadric_coeffs(scroll::scroll_form());
    Matrix<Rational> G(0, 0);
    G.append_row(as_row(g));
    auto with = [&](const MPoly& p) {
        Matrix<Rational> M = G;
        M.append_row(as_row(quadric_coeffs(p)));
        return rank(M);
    };
    if (with(A) != 2 || with(B) != 2) return false; // zero or a multiple of the scroll form
    Matrix<Rational> M = G;
    M.append_row(as_row(quadric_coeffs(A)));
    M.append_row(as_row(quadric_coeffs(B)));
    return rank(M) == 2;
}

MPoly q_choice_from_spec(const branch::BranchSpec& spec) {
    const MPoly zero(scroll::projective_vars());
    return spec.q_form().subst({{3, zero}, {4, zero}});
}

namespace {

// Rational rows of a linear condition with coefficients in Q(t): traces of t^j * row.
void realify(const std::vector<FieldElem>& row, const FieldElem& rhs, int degree, const FieldPtr& K, Matrix<Rational>& A, std::vector<Rational>& b) {
    FieldElem tj(1);
    for (int j = 0; j < degree; ++j) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back((tj * x).trace());
        A.append_row(r);
        b.push_back((tj * rhs).trace());
        if (K) tj = tj * FieldElem::generator(K);
    }
}

// Solves sum_k x_k terms_k(p) = -base(p) over the points of the listed pairs.
std::optional<std::vector<Rational>> fit_points(const branch::IntersectionReport& rep, const std::vector<std::pair<int, int>>& pairs, const std::vector<MPoly>& terms, const MPoly& base, size_t expect, std::vector<std::string>& flags, const std::string& what) {
    Matrix<Rational> A(0, 0);
    std::vector<Rational> b;
    size_t geometric = 0;
    for (const auto& pr : rep.pairs) {
        bool use = false;
        for (const auto& [i, j] : pairs) use = use || (pr.i == i && pr.j == j);
        if (!use) continue;
        for (const auto& ip : pr.points) {
            std::vector<FieldElem> row;
            for (const auto& t : terms) row.push_back(branch::eval_at(t, ip.point));
            realify(row, FieldElem(0) - branch::eval_at(base, ip.point), ip.point.degree(), ip.point.field, A, b);
            geometric += static_cast<size_t>(ip.point.degree());
        }
    }
    if (geometric != expect) flags.push_back(what + ": expected " + std::to_string(expect) + " points, found " + std::to_string(geometric));
    if (A.rows() == 0 || rank(A) < terms.size()) {
        flags.push_back(what + ": singular linear system");
        return std::nullopt;
    }
    auto x = solve(A, b);
    if (!x) flags.push_back(what + ": inconsistent linear system");
    return x;
}

} // namespace

StepwiseResult stepwise_construct(const branch::IntersectionReport& points, const std::vector<branch::DoubleCurve>& curves, const MPoly& q) {
    StepwiseResult res;
    for (const auto& [m, c] : q.terms())
        if (monomial_degree(m) != 2 || exponent(m, 3) || exponent(m, 4)) throw std::invalid_argument("q must be a quadratic form in z0, z1, z2");
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    for (const auto& pr : points.pairs)
        if (pr.i == 3 && pr.j == 4)
            for (const auto& ip : pr.points)
                if (!branch::eval_at(q, ip.point).is_zero()) res.flags.push_back("q does not pass through C3 cap C4");

    // on H4 = {z4 = 0}: q + a0 z0z3 + a1 z1z3 + a2 z2z3 + a3 z3^2. The points of C1, C2 there have
    // z0 = 0 and miss a0, so the C5 points on H4 are used too (overdetermined, checked consistent).
    const std::vector<MPoly> ta{z(0) * z(3), z(1) * z(3), z(2) * z(3), z(3) * z(3)};
    const std::vector<MPoly> tb{z(0) * z(4), z(1) * z(4), z(2) * z(4), z(4) * z(4)};
    auto a = fit_points(points, {{1, 4}, {2, 4}, {4, 5}}, ta, q, 8, res.flags, "a-coefficients");
    auto b = fit_points(points, {{1, 3}, {2, 3}, {3, 5}}, tb, q, 8, res.flags, "b-coefficients");
    if (!a || !b) return res;
    MPoly partial = q;
    for (size_t i = 0; i < 4; ++i) {
        res.a[i] = (*a)[i];
        res.b[i] = (*b)[i];
        partial += res.a[i] * ta[i] + res.b[i] * tb[i];
    }
    auto c = fit_points(points, {{1, 2}}, {z(3) * z(4)}, partial, 2, res.flags, "c-coefficient");
    if (!c) return res;
    res.c = (*c)[0];
    res.Q = partial + res.c * z(3) * z(4);

    const QuadVec v = quadric_coeffs(res.Q);
    res.contains_all_curves = true;
    for (const auto& cv : curves) {
        const Matrix<Rational> M = containment_conditions(cv);
        for (size_t r = 0; r < M.rows(); ++r) {
            Rational s = 0;
            for (size_t k = 0; k < 15; ++k) s += M(r, k) * v[k];
            if (sgn(s) != 0) res.contains_all_curves = false;
        }
    }
    return res;
}

} // namespace branchdiv::quadric

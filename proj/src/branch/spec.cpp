#include "branchdiv/branch/spec.hpp"

#include "branchdiv/branch/curves.hpp"
#include "branchdiv/exactalg/ideal.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <random>

namespace branchdiv::branch {

using scroll::z;

size_t q_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 4) throw std::out_of_range("quadric index");
    // rows of length 5, 4, 3, 2, 1
    size_t k = 0;
    for (int r = 0; r < i; ++r) k += static_cast<size_t>(5 - r);
    return k + static_cast<size_t>(j - i);
}

MPoly BranchSpec::f_form() const {
    MPoly r(scroll::projective_vars());
    for (int i = 0; i < 5; ++i) r += f[static_cast<size_t>(i)] * z(i);
    return r;
}

MPoly BranchSpec::q_form() const {
    MPoly r(scroll::projective_vars());
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) r += q[q_index(i, j)] * z(i) * z(j);
    return r;
}

BranchSpec spec_from_forms(const MPoly& f, const MPoly& Q) {
    BranchSpec s;
    for (const auto& [m, c] : f.terms()) {
        if (monomial_degree(m) != 1) throw std::invalid_argument("f must be a linear form");
        for (int i = 0; i < 5; ++i)
            if (exponent(m, i)) s.f[static_cast<size_t>(i)] = c;
    }
    for (const auto& [m, c] : Q.terms()) {
        if (monomial_degree(m) != 2) throw std::invalid_argument("Q must be a quadratic form");
        std::vector<int> idx;
        for (int i = 0; i < 5; ++i)
            for (unsigned e = 0; e < exponent(m, i); ++e) idx.push_back(i);
        s.q[q_index(idx[0], idx[1])] = c;
    }
    return s;
}

bool GenericityReport::all() const {
    return q_transversal && ridge_off_h3 && ridge_off_h4 && ridge_off_f && f_section_cone && planes_avoid_ridge && curves_distinct &&
           intersections_finite;
}

std::vector<std::string> GenericityReport::failures() const {
    std::vector<std::string> out;
    if (!q_transversal) out.push_back("q_transversal");
    if (!ridge_off_h3) out.push_back("ridge_off_h3");
    if (!ridge_off_h4) out.push_back("ridge_off_h4");
    if (!ridge_off_f) out.push_back("ridge_off_f");
    if (!f_section_cone) out.push_back("f_section_cone");
    if (!planes_avoid_ridge) out.push_back("planes_avoid_ridge");
    if (!curves_distinct) out.push_back("curves_distinct");
    if (!intersections_finite) out.push_back("intersections_finite");
    return out;
}

namespace {

bool proportional(const std::array<Rational, 5>& a, const std::array<Rational, 5>& b) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] != a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)]) return false;
    return true;
}

std::array<Rational, 5> unit(int i) {
    std::array<Rational, 5> e{};
    e[static_cast<size_t>(i)] = 1;
    return e;
}

// Q restricted to Y cap {h = 0} is zero: the "curve" would be a whole surface.
bool q_vanishes_on_cone(const MPoly& Q, const std::array<Rational, 5>& h) {
    // order putting a variable with nonzero coefficient first makes {h, G} a Groebner basis
    int lead = -1;
    for (int i = 4; i >= 3; --i)
        if (sgn(h[static_cast<size_t>(i)]) != 0) lead = i;
    if (lead < 0) return false; // not a cone section; handled by f_section_cone
    MPoly hf(scroll::projective_vars());
    for (int i = 0; i < 5; ++i) hf += h[static_cast<size_t>(i)] * z(i);
    std::vector<int> pr{lead};
    for (int i = 0; i < 5; ++i)
        if (i != lead) pr.push_back(i);
    IdealBasis I = basis_if_coprime_leads({hf, scroll::scroll_form()}, MonomialOrder(pr));
    return reduce_mod(Q, I).is_zero();
}

} // namespace

GenericityReport genericity(const BranchSpec& spec) {
    GenericityReport g;
    const MPoly Q = spec.q_form();
    const Rational& a = spec.q[q_index(3, 3)];
    const Rational& b = spec.q[q_index(3, 4)];
    const Rational& c = spec.q[q_index(4, 4)];
    const bool ridge_nonzero = sgn(a) != 0 || sgn(b) != 0 || sgn(c) != 0;
    g.q_transversal = ridge_nonzero && b * b - 4 * a * c != 0;
    // roots [z3:z4] of a z3^2 + b z3 z4 + c z4^2
    g.ridge_off_h3 = ridge_nonzero && sgn(c) != 0; // z3 = 0 is a root iff c = 0
    g.ridge_off_h4 = ridge_nonzero && sgn(a) != 0;
    const Rational& f3 = spec.f[3];
    const Rational& f4 = spec.f[4];
    g.f_section_cone = sgn(f3) != 0 || sgn(f4) != 0;
    // f vanishes at a ridge root iff [f4 : -f3] is a root
    g.ridge_off_f = ridge_nonzero && g.f_section_cone && a * f4 * f4 - b * f4 * f3 + c * f3 * f3 != 0;
    g.planes_avoid_ridge = sgn(f3) != 0 && sgn(f4) != 0;
    bool distinct = !proportional(spec.f, unit(3)) && !proportional(spec.f, unit(4)) && g.f_section_cone;
    // conics: Q must not vanish on the planes {z0 = z1 = 0}, {z0 = z2 = 0}
    for (int k : {1, 2}) {
        MPoly r = Q.subst({{0, MPoly(scroll::projective_vars())}, {k, MPoly(scroll::projective_vars())}});
        distinct = distinct && !r.is_zero();
    }
    if (distinct)
        distinct = !q_vanishes_on_cone(Q, unit(3)) && !q_vanishes_on_cone(Q, unit(4)) && !q_vanishes_on_cone(Q, spec.f);
    g.curves_distinct = distinct;
    g.intersections_finite = distinct && g.planes_avoid_ridge && intersection_forms_nonzero(spec);
    return g;
}

Assembly assemble(const BranchSpec& spec) {
    const MPoly f = spec.f_form(), Q = spec.q_form();
    if (f.is_zero()) throw DegenerateSpecError("f is zero");
    if (Q.is_zero()) throw DegenerateSpecError("Q is zero");
    IdealBasis I = basis_if_coprime_leads({scroll::scroll_form()});
    if (reduce_mod(Q, I).is_zero()) throw DegenerateSpecError("Q lies in the ideal (z0^2 - z1 z2); B degenerates");
    Assembly a;
    a.F = z(0) * z(3) * z(4) * f - Q * Q;
    a.genericity = genericity(spec);
    return a;
}

namespace {

Rational draw(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    long p = lo + static_cast<long>(rng() % span);
    long d = 1 + static_cast<long>(rng() % 9);
    return make_rational(p, d);
}

bool small(const Rational& x) { return abs(x.get_num()) <= 9 && x.get_den() <= 9; }

} // namespace

BranchSpec random_spec(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        BranchSpec s;
        for (auto& x : s.f) x = draw(rng, -9, 9);
        if (sgn(s.f[3]) == 0 || sgn(s.f[4]) == 0) continue;
        // off-diagonal coefficients q_ij = 2 M_ij; M diagonally dominant
        std::array<Rational, 5> row{};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                Rational v = draw(rng, -9, 9);
                s.q[q_index(i, j)] = v;
                row[static_cast<size_t>(i)] += abs(v) / 2;
                row[static_cast<size_t>(j)] += abs(v) / 2;
            }
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            const Rational& r = row[static_cast<size_t>(i)];
            if (r >= 9) {
                ok = false;
                break;
            }
            // smallest p/d > r with d drawn, p <= 9
            long d = 1 + static_cast<long>(rng() % 9);
            Rational lower = r * d;
            Integer p = lower.get_num() / lower.get_den() + 1;
            if (p > 9) p = 9, d = 1;
            Rational diag(p, d);
            diag.canonicalize();
            if (diag <= r) diag = 9;
            s.q[q_index(i, i)] = diag;
        }
        if (!ok) continue;
        for (const auto& x : s.q) ok = ok && small(x);
        if (!ok) continue;
        try {
            if (assemble(s).genericity.all()) return s;
        } catch (const DegenerateSpecError&) {
        }
    }
    throw std::runtime_error("random_spec: no generic spec drawn");
}

} // namespace branchdiv::branch

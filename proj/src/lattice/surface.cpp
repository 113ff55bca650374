#include "branchdiv/lattice/surface.hpp"

#include "branchdiv/exactalg/linalg.hpp"

namespace branchdiv::lattice {

namespace {

const Ledger& pic() { return builtin_ledger("picS"); }

} // namespace

PicS PicS::basis(int i) {
    PicS p;
    p.v.at(static_cast<size_t>(i)) = 1;
    return p;
}

PicS PicS::from(const std::string& expr) {
    ClassExpr e = pic().parse(expr);
    PicS p;
    for (const auto& [k, c] : e.terms()) {
        if (k.size() != 1) throw LedgerError("\"" + expr + "\" is not a divisor class");
        p.v[static_cast<size_t>(k[0])] = c.get_si();
    }
    return p;
}

PicS operator+(const PicS& a, const PicS& b) {
    PicS r;
    for (size_t i = 0; i < 10; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
}

PicS operator-(const PicS& a, const PicS& b) {
    PicS r;
    for (size_t i = 0; i < 10; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
}

PicS operator*(long s, const PicS& a) {
    PicS r;
    for (size_t i = 0; i < 10; ++i) r.v[i] = s * a.v[i];
    return r;
}

std::string PicS::str() const {
    std::string s;
    const auto& g = pic().generators();
    for (size_t i = 0; i < 10; ++i) {
        long c = v[i];
        if (c == 0) continue;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        long a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += g[i];
    }
    return s.empty() ? "0" : s;
}

std::vector<std::vector<long>> gram_S() {
    std::vector<std::vector<long>> G(10, std::vector<long>(10, 0));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            ClassExpr::Key k{std::min(i, j), std::max(i, j)};
            G[static_cast<size_t>(i)][static_cast<size_t>(j)] = pic().product(k).value.get_si();
        }
    return G;
}

long pair_S(const PicS& a, const PicS& b) {
    auto G = gram_S();
    long s = 0;
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) s += a.v[i] * G[i][j] * b.v[j];
    return s;
}

std::pair<int, int> signature_S() {
    // symmetric elimination over Q keeps congruence, so the signs of the pivots give the inertia
    auto G = gram_S();
    const size_t n = G.size();
    Matrix<Rational> M(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M(i, j) = G[i][j];
    int pos = 0, neg = 0;
    for (size_t k = 0; k < n; ++k) {
        if (sgn(M(k, k)) == 0) {
            size_t p = k + 1;
            while (p < n && sgn(M(p, k)) == 0) ++p;
            if (p == n) continue;
            // M_kk + 2 M_kp + M_pp after adding row/col p to k
            for (size_t j = 0; j < n; ++j) M(k, j) += M(p, j);
            for (size_t i = 0; i < n; ++i) M(i, k) += M(i, p);
            if (sgn(M(k, k)) == 0) {
                for (size_t j = 0; j < n; ++j) M(k, j) -= 2 * M(p, j);
                for (size_t i = 0; i < n; ++i) M(i, k) -= 2 * M(i, p);
            }
        }
        Rational d = M(k, k);
        (d > 0 ? pos : neg)++;
        for (size_t i = k + 1; i < n; ++i) {
            if (sgn(M(i, k)) == 0) continue;
            Rational f = M(i, k) / d;
            for (size_t j = k; j < n; ++j) M(i, j) -= f * M(k, j);
            for (size_t j = k; j < n; ++j) M(j, i) = M(i, j);
        }
    }
    return {pos, neg};
}

DecompositionReport decomposition_check(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("decomposition_check: i must be 1, 2 or 3");
    DecompositionReport r;
    r.i = i;
    const std::string si = std::to_string(i);
    r.lhs = PicS::from("Kinv + e" + si + " - e" + si + "bar");
    r.fixed_part = PicS::from("h1 - e1bar - e2bar - e3bar");
    std::string moving = "h1 + 2h2 - e" + si + "bar - e4 - e4bar";
    for (int j = 1; j <= 3; ++j)
        if (j != i) moving += " - e" + std::to_string(j);
    r.moving_part = PicS::from(moving);
    r.sum_identity = r.lhs == r.fixed_part + r.moving_part;
    r.pairing_with_C1bar = pair_S(PicS::from("C1bar"), r.lhs);
    return r;
}

AlphaClass operator+(const AlphaClass& a, const AlphaClass& b) {
    AlphaClass r;
    for (size_t i = 0; i < 5; ++i) r.twice[i] = a.twice[i] + b.twice[i];
    return r;
}

bool AlphaClass::integral() const {
    for (long x : twice)
        if (x % 2 != 0) return false;
    return true;
}

std::string AlphaClass::str() const {
    static const char* names[5] = {"F", "alpha1", "alpha2", "alpha3", "alpha4"};
    std::string s;
    for (size_t i = 0; i < 5; ++i) {
        long c = twice[i];
        if (c == 0) continue;
        bool neg = c < 0;
        long a = neg ? -c : c;
        std::string coef = a % 2 == 0 ? (a / 2 == 1 ? "" : std::to_string(a / 2)) : std::to_string(a) + "/2";
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        s += coef + (coef.empty() ? "" : "*") + names[i];
    }
    return s.empty() ? "0" : s;
}

std::array<AlphaClass, 4> cc1_half_classes() {
    // halves of the full classes; twice the half is the full class
    return {AlphaClass{{1, -1, -1, -1, -1}}, AlphaClass{{1, 1, 1, 1, 1}}, AlphaClass{{1, -1, -1, -1, 1}},
            AlphaClass{{1, 1, 1, 1, -1}}};
}

bool Cc1Report::obstruction_holds() const {
    for (const auto& p : pairs)
        if (p.equals_target) return false;
    return pairs.size() == 10;
}

Cc1Report cc1_obstruction(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("cc1_obstruction: i must be in 1..4");
    Cc1Report r;
    r.i = i;
    r.target.twice = {2, 0, 0, 0, 0};
    r.target.twice[static_cast<size_t>(i)] = 2;
    auto h = cc1_half_classes();
    r.halves_integral_pairwise = true;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            PairSum p;
            p.a = a;
            p.b = b;
            p.sum = h[static_cast<size_t>(a)] + h[static_cast<size_t>(b)];
            p.equals_target = p.sum == r.target;
            if (a != b && !p.sum.integral()) r.halves_integral_pairwise = false;
            r.pairs.push_back(p);
        }
    return r;
}

Integer triple_Z1(const std::string& expr) { return builtin_ledger("z1").evaluate(expr); }

Integer ring_Yt(const std::string& expr) { return builtin_ledger("ytilde").evaluate(expr); }

} // namespace branchdiv::lattice

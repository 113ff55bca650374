#include "branchdiv/exactalg/local_algebra.hpp"

#include "branchdiv/exactalg/ideal.hpp"
#include "branchdiv/exactalg/linalg.hpp"

#include <map>

namespace branchdiv {

std::vector<Monomial> monomials_exact(int nvars, int d) { return monomials_of_degree(nvars, d); }

namespace {

// Rank of span{mono * g mod m^j : deg mono <= j - 1}.
size_t jet_rank(const std::vector<KPoly>& gens, int n, int j) {
    std::vector<Monomial> cols;
    for (int d = 0; d < j; ++d)
        for (Monomial m : monomials_exact(n, d)) cols.push_back(m);
    std::map<Monomial, size_t> idx;
    for (size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    Matrix<FieldElem> M(0, 0);
    for (const auto& g : gens) {
        for (int d = 0; d < j; ++d)
            for (Monomial mono : monomials_exact(n, d)) {
                std::vector<FieldElem> row(cols.size(), FieldElem(0));
                bool any = false;
                for (const auto& [m, c] : g.terms()) {
                    if (static_cast<int>(monomial_degree(m)) + d >= j) continue;
                    row[idx.at(m + mono)] = c;
                    any = true;
                }
                if (any) M.append_row(row);
            }
    }
    if (M.rows() == 0) return 0;
    return rank(M);
}

} // namespace

LocalDimension local_dimension(const std::vector<KPoly>& gens, int max_k) {
    LocalDimension r;
    if (gens.empty()) return r;
    const int n = gens.front().nvars();
    for (const auto& g : gens)
        if (!g.is_zero() && !g.constant_term().is_zero()) {
            r.certified = true;
            r.k = 0;
            r.dimension = 0;
            return r;
        }
    size_t prev = jet_rank(gens, n, 1); // always 0: generators vanish at the origin
    size_t below = 1;                   // number of monomials of degree < k
    for (int k = 1; k <= max_k; ++k) {
        size_t cur = jet_rank(gens, n, k + 1);
        size_t ek = monomials_exact(n, k).size();
        if (cur == ek + prev) {
            r.certified = true;
            r.k = k;
            r.dimension = static_cast<int>(below - prev);
            return r;
        }
        below += ek;
        prev = cur;
    }
    return r;
}

int hessian_rank(const KPoly& g) {
    const int n = g.nvars();
    Matrix<FieldElem> H(static_cast<size_t>(n), static_cast<size_t>(n));
    for (const auto& [m, c] : g.terms()) {
        if (monomial_degree(m) != 2) continue;
        int a = -1, b = -1;
        for (int i = 0; i < n; ++i) {
            unsigned e = exponent(m, i);
            if (e == 2) a = b = i;
            else if (e == 1) (a < 0 ? a : b) = i;
        }
        if (a == b) H(static_cast<size_t>(a), static_cast<size_t>(a)) = FieldElem(Rational(2)) * c;
        else {
            H(static_cast<size_t>(a), static_cast<size_t>(b)) = c;
            H(static_cast<size_t>(b), static_cast<size_t>(a)) = c;
        }
    }
    return static_cast<int>(rank(H));
}

} // namespace branchdiv

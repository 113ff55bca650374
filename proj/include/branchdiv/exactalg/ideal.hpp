#pragma once

#include "branchdiv/exactalg/mpoly.hpp"

#include <stdexcept>
#include <vector>

namespace branchdiv {

struct NotGroebnerError : std::logic_error {
    using std::logic_error::logic_error;
};

// Lexicographic order with a declared variable priority (priority[0] is largest).
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<int> priority) : pr_(std::move(priority)) {}
    bool less(Monomial a, Monomial b) const;
    const std::vector<int>& priority() const { return pr_; }

private:
    std::vector<int> pr_; // empty: natural order z0 > z1 > ...
};

class IdealBasis {
public:
    IdealBasis() = default;
    IdealBasis(std::vector<MPoly> gens, MonomialOrder order, bool groebner, int degree_limit = -1);

    const std::vector<MPoly>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool is_groebner() const { return groebner_; }
    // -1: a full Groebner basis; d >= 0: valid for homogeneous inputs of degree <= d.
    int degree_limit() const { return limit_; }

    Monomial leading_monomial(const MPoly& p) const;

private:
    std::vector<MPoly> gens_;
    MonomialOrder order_;
    bool groebner_ = false;
    int limit_ = -1;
};

// Flags the basis when leading monomials are pairwise coprime (Buchberger's first criterion).
IdealBasis basis_if_coprime_leads(std::vector<MPoly> gens, MonomialOrder order = {});

// Degree-d component spanned by the given forms, in reduced row echelon form.
IdealBasis truncated_basis(const std::vector<MPoly>& forms_of_degree_d, int d, MonomialOrder order = {});

// Normal form; zero iff p lies in the ideal. Refuses when the flag is unset.
MPoly reduce_mod(const MPoly& p, const IdealBasis& I);

// Every monomial of degree d in n variables, in decreasing natural order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace branchdiv

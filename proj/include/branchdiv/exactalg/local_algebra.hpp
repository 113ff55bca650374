#pragma once

#include "branchdiv/exactalg/mpoly.hpp"

#include <vector>

namespace branchdiv {

struct LocalDimension {
    bool certified = false; // m^k lies in the ideal plus m^(k+1) for some k <= max_k
    int k = -1;
    int dimension = -1; // dim of the local algebra at the origin when certified
};

// Generators are expanded at the origin and must be exact through degree max_k.
LocalDimension local_dimension(const std::vector<KPoly>& gens, int max_k);

// Rank of the Hessian of g at the origin.
int hessian_rank(const KPoly& g);

// Monomials of degree exactly d in n variables.
std::vector<Monomial> monomials_exact(int nvars, int d);

} // namespace branchdiv

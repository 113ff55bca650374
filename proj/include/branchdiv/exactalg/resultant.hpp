#pragma once

#include "branchdiv/exactalg/mpoly.hpp"

#include <string>

namespace branchdiv {

struct ResultantReport {
    MPoly value;
    // Leading coefficients in the eliminated variable; the projection may lose
    // common roots where both vanish.
    MPoly lead_p;
    MPoly lead_q;
    bool degenerate = false; // both leading coefficients constant-free and sharing a zero is possible
};

// Pseudo-remainder of a by b in variable v.
MPoly prem(const MPoly& a, const MPoly& b, int v);

// Resultant in v by the subresultant remainder sequence.
MPoly resultant(const MPoly& p, const MPoly& q, int v);
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& v);
ResultantReport resultant_report(const MPoly& p, const MPoly& q, int v);

// Res_v(a, b) for a, b involving only the variables v and keep, computed by
// multi-modular evaluation and interpolation. Result is univariate in keep.
UPoly<Rational> resultant_bivariate(const MPoly& a, const MPoly& b, int v, int keep);

} // namespace branchdiv

#pragma once

#include <string>
#include <vector>

namespace branchdiv::lattice {

struct ExtraSingularity {
    long mu = 1;     // Milnor number
    long e_beta = 2; // Euler number of the exceptional curve over it
};

struct EulerLedger {
    // fixed chain
    long e_Z = 0, e_Z1 = 0, e_Z3 = 0, e_Z4_chain = 0;
    // Ytilde side
    long e_Ytilde = 0, e_Sigma = 0, e_l = 0, e_Y = 0;
    long c2_dot_D = 0, adjunction_term = 0, e_Dtilde = 0, e_D = 0;
    // branch divisor side
    long sum_mu = 0, e_B = 0, e_Z5 = 0, e_Z4 = 0;
    long constraint_sum = 0;
    bool constraint_closes = false; // sum (e(beta) + mu - 1) == 12
    bool z4_closes = false;         // e(Z4) from B equals the fixed chain value
    bool closed() const { return constraint_closes && z4_closes; }
};

EulerLedger euler_ledger(const std::vector<ExtraSingularity>& extras);

// "6x(1,2)", "(10,3)", "2x(1,2),(3,2)" or "" / "none".
std::vector<ExtraSingularity> parse_extras(const std::string& text);

} // namespace branchdiv::lattice

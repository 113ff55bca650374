#include "branchdiv/lattice/euler.hpp"

#include "branchdiv/lattice/ledger.hpp"

#include <cctype>
#include <stdexcept>

namespace branchdiv::lattice {

EulerLedger euler_ledger(const std::vector<ExtraSingularity>& extras) {
    EulerLedger L;
    // twistor space over 4CP2: b2 = 4
    const long b2 = 4;
    L.e_Z = 2 + 2 * (b2 + 1);
    // two disjoint P1 replaced by two P1 x P1
    L.e_Z1 = L.e_Z + 2 * (4 - 2);
    L.e_Z3 = L.e_Z1; // flop
    // E1 u E1bar (Euler number 8) contracted onto two curves (Euler number 2)
    L.e_Z4_chain = L.e_Z3 - (8 - 2);

    L.e_Ytilde = 2 * 3; // P2-bundle over P1
    L.e_Sigma = 4;
    L.e_l = 2;
    L.e_Y = L.e_Ytilde - (L.e_Sigma - L.e_l);

    const Ledger& yt = builtin_ledger("ytilde");
    L.c2_dot_D = yt.evaluate("c2 * D").get_si();
    L.adjunction_term = yt.evaluate("(K + D) * D * D").get_si();
    L.e_Dtilde = L.c2_dot_D + L.adjunction_term;
    // four P1 contracted to the points D cap l
    L.e_D = L.e_Dtilde - 4;

    long sum_beta = 0;
    for (const auto& x : extras) {
        L.sum_mu += x.mu;
        sum_beta += x.e_beta - 1;
        L.constraint_sum += x.e_beta + x.mu - 1;
    }
    // smoothing 24 nodes and the extras, and splitting each A3 into two A1
    L.e_B = L.e_D - 24 - 2 * (3 - 2) - L.sum_mu;
    L.e_Z5 = 2 * L.e_Y - L.e_B;
    L.e_Z4 = L.e_Z5 + 24 + sum_beta;
    L.constraint_closes = L.constraint_sum == 12;
    L.z4_closes = L.e_Z4 == L.e_Z4_chain;
    return L;
}

std::vector<ExtraSingularity> parse_extras(const std::string& text) {
    std::vector<ExtraSingularity> out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "none" || s == "[]") return out;
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("cannot parse extras \"" + text + "\": " + why);
    };
    size_t i = 0;
    while (i < s.size()) {
        long count = 1;
        size_t x = s.find_first_of("x(", i);
        if (x == std::string::npos) throw fail("expected (mu,e_beta)");
        if (s[x] == 'x') {
            try {
                count = std::stol(s.substr(i, x - i));
            } catch (...) {
                throw fail("bad multiplicity");
            }
            if (count < 0) throw fail("negative multiplicity");
            i = x + 1;
        } else if (x != i) {
            throw fail("unexpected text before '('");
        }
        if (i >= s.size() || s[i] != '(') throw fail("expected '('");
        size_t close = s.find(')', i);
        size_t comma = s.find(',', i);
        if (close == std::string::npos || comma == std::string::npos || comma > close) throw fail("expected (mu,e_beta)");
        ExtraSingularity e;
        try {
            e.mu = std::stol(s.substr(i + 1, comma - i - 1));
            e.e_beta = std::stol(s.substr(comma + 1, close - comma - 1));
        } catch (...) {
            throw fail("non-integer entry");
        }
        if (e.mu < 1) throw fail("Milnor number must be positive");
        for (long k = 0; k < count; ++k) out.push_back(e);
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != ',' && s[i] != ';') throw fail("expected ','");
            ++i;
        }
    }
    return out;
}

} // namespace branchdiv::lattice

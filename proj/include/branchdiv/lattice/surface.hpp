#pragma once

#include "branchdiv/lattice/ledger.hpp"

#include <array>
#include <string>
#include <vector>

namespace branchdiv::lattice {

// Integer class in Pic S, basis h1, h2, e1..e4, e1bar..e4bar.
struct PicS {
    std::array<long, 10> v{};

    static PicS basis(int i);
    // Any class of the picS ledger, e.g. "C1", "Kinv", "h1-e4".
    static PicS from(const std::string& expr);
    friend PicS operator+(const PicS& a, const PicS& b);
    friend PicS operator-(const PicS& a, const PicS& b);
    friend PicS operator*(long s, const PicS& a);
    friend bool operator==(const PicS& a, const PicS& b) { return a.v == b.v; }
    std::string str() const;
};

long pair_S(const PicS& a, const PicS& b);

// Gram matrix of the picS ledger pairing and its signature (positive, negative).
std::vector<std::vector<long>> gram_S();
std::pair<int, int> signature_S();

struct DecompositionReport {
    int i = 0;
    PicS lhs, fixed_part, moving_part;
    bool sum_identity = false;
    long pairing_with_C1bar = 0;
    bool passes() const { return sum_identity && pairing_with_C1bar == -2; }
};

// Kinv + (e_i - e_i bar) = (h1 - e1bar - e2bar - e3bar) + (h1 + 2h2 - e_i bar - e4 - e4bar - sum_{j<=3, j!=i} e_j).
DecompositionReport decomposition_check(int i);

// Classes F + sum c_j alpha_j stored doubled so halves are integral.
struct AlphaClass {
    std::array<long, 5> twice{}; // F, alpha1..alpha4
    friend AlphaClass operator+(const AlphaClass& a, const AlphaClass& b);
    friend bool operator==(const AlphaClass& a, const AlphaClass& b) { return a.twice == b.twice; }
    bool integral() const;
    std::string str() const;
};

// Halves of F -+ sum alpha_j and F +- (alpha4 - alpha1 - alpha2 - alpha3).
std::array<AlphaClass, 4> cc1_half_classes();

struct PairSum {
    int a = 0, b = 0; // indices into cc1_half_classes, a <= b
    AlphaClass sum;   // of the halves
    bool equals_target = false;
};

struct Cc1Report {
    int i = 0;
    AlphaClass target; // F + alpha_i
    std::vector<PairSum> pairs; // all 10 unordered pairs with repetition
    bool halves_integral_pairwise = false;
    bool obstruction_holds() const;
};

// Compares every sum of two half classes with F + alpha_i (equivalently
// full-class sums with 2(F + alpha_i)); i in 1..4.
Cc1Report cc1_obstruction(int i);

// Triple product on Z1 (ledger "z1"); expression must be of degree 3.
Integer triple_Z1(const std::string& expr);
// Degree-3 evaluation on Ytilde (ledger "ytilde").
Integer ring_Yt(const std::string& expr);

} // namespace branchdiv::lattice

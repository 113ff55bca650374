#include "branchdiv/lattice/euler.hpp"
#include "branchdiv/lattice/ledger.hpp"
#include "branchdiv/lattice/surface.hpp"

#include <doctest.h>

#include <set>

using namespace branchdiv;
using namespace branchdiv::lattice;

namespace {

// h1.h2 = 1, h_i^2 = 0, exceptional classes pairwise orthogonal with square -1.
long oracle_pair(const PicS& a, const PicS& b) {
    long s = a.v[0] * b.v[1] + a.v[1] * b.v[0];
    for (size_t i = 2; i < 10; ++i) s -= a.v[i] * b.v[i];
    return s;
}

PicS cls(std::initializer_list<long> v) {
    PicS p;
    size_t i = 0;
    for (long x : v) p.v[i++] = x;
    return p;
}

} // namespace

TEST_CASE("Pic S classes") {
    const PicS C1 = cls({1, 0, -1, -1, -1, 0, 0, 0, 0, 0});
    const PicS C1bar = cls({1, 0, 0, 0, 0, 0, -1, -1, -1, 0});
    const PicS C2 = cls({0, 1, 0, 0, 0, -1, 0, 0, 0, 0});
    const PicS C2bar = cls({0, 1, 0, 0, 0, 0, 0, 0, 0, -1});
    const PicS Kinv = cls({2, 2, -1, -1, -1, -1, -1, -1, -1, -1});
    CHECK(PicS::from("C1") == C1);
    CHECK(PicS::from("C2bar") == C2bar);
    CHECK(PicS::from("Kinv") == Kinv);

    CHECK(pair_S(C1, C1) == -3);
    CHECK(pair_S(C2, C2) == -1);
    const PicS C = C1 + C2 + C1bar + C2bar;
    CHECK(pair_S(C, C1) == -1);
    CHECK(oracle_pair(C, C1) == -1);
    const PicS D = 2 * Kinv - C1 - C1bar;
    CHECK(pair_S(D, D) == 2);
    CHECK(pair_S(Kinv, Kinv) == 0);

    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(pair_S(PicS::basis(i), PicS::basis(j)) == oracle_pair(PicS::basis(i), PicS::basis(j)));
    CHECK(signature_S() == std::pair<int, int>{1, 9});
}

TEST_CASE("picS ledger expressions") {
    const auto& L = builtin_ledger("picS");
    CHECK(L.evaluate("C1^2") == -3);
    CHECK(L.evaluate("C1bar^2") == -3);
    CHECK(L.evaluate("C2^2") == -1);
    CHECK(L.evaluate("C.C1") == -1);
    CHECK(L.evaluate("C.C1bar") == -1);
    CHECK(L.evaluate("(2K-C1-C1bar)^2") == 2);
    CHECK(L.evaluate("(2Kinv-C1-C1bar)^2") == 2);
    CHECK(L.evaluate("h1*h2") == 1);
    CHECK_THROWS_AS(L.evaluate("C1"), LedgerError);
    CHECK_THROWS_AS(L.evaluate("C1.bogus"), LedgerError);
    CHECK_THROWS_AS(L.evaluate("(C1"), LedgerError);
}

TEST_CASE("decomposition check") {
    for (int i = 1; i <= 3; ++i) {
        const auto r = decomposition_check(i);
        CHECK(r.sum_identity);
        CHECK(r.pairing_with_C1bar == -2);
        CHECK(r.passes());
        CHECK(r.lhs == r.fixed_part + r.moving_part);
        CHECK(oracle_pair(r.lhs, PicS::from("C1bar")) == -2);
    }
}

TEST_CASE("cc1 obstruction by exhaustive enumeration") {
    // doubled coordinates in F, alpha1..alpha4
    const std::vector<std::array<long, 5>> halves{{1, -1, -1, -1, -1}, {1, 1, 1, 1, 1}, {1, -1, -1, -1, 1}, {1, 1, 1, 1, -1}};
    std::set<std::array<long, 5>> lib;
    for (const auto& h : cc1_half_classes()) lib.insert(h.twice);
    CHECK(lib == std::set<std::array<long, 5>>(halves.begin(), halves.end()));

    for (int i = 1; i <= 3; ++i) {
        std::array<long, 5> target{2, 0, 0, 0, 0};
        target[static_cast<size_t>(i)] = 2;
        int hits = 0, pairs = 0;
        for (size_t a = 0; a < 4; ++a)
            for (size_t b = a; b < 4; ++b) {
                ++pairs;
                std::array<long, 5> s{};
                for (size_t k = 0; k < 5; ++k) s[k] = halves[a][k] + halves[b][k];
                if (s == target) ++hits;
            }
        CHECK(pairs == 10);
        CHECK(hits == 0);

        const auto r = cc1_obstruction(i);
        CHECK(r.pairs.size() == 10);
        CHECK(r.obstruction_holds());
        for (const auto& p : r.pairs) CHECK_FALSE(p.equals_target);
    }
}

TEST_CASE("triple products on Z1") {
    CHECK(triple_Z1("(2F-E1-E1bar)^2.E1") == 0);
    CHECK(triple_Z1("D^2.E1") == 0);
    for (int k = 1; k <= 5; ++k) CHECK(triple_Z1("(2F-E1-E1bar)^2.(" + std::to_string(k) + "F)") == 2 * k);
    CHECK(triple_Z1("E1.E1bar.F") == 0);
    CHECK_THROWS_AS(triple_Z1("E1.F"), LedgerError);
}

TEST_CASE("Ytilde ring") {
    CHECK(ring_Yt("Sigma^3") == -4);
    CHECK(ring_Yt("(K+D).D.D") == 32);
    CHECK(ring_Yt("(K+4(Sigma+2f)).(4(Sigma+2f))^2") == 32);
    CHECK(ring_Yt("c2.D") == 32);
    CHECK(ring_Yt("f^3") == 0);
}

TEST_CASE("Euler ledger") {
    const auto fixed = euler_ledger({});
    CHECK(fixed.e_Z == 12);
    CHECK(fixed.e_Z1 == 16);
    CHECK(fixed.e_Z4_chain == 10);
    CHECK(fixed.e_Y == 4);
    CHECK(fixed.e_Dtilde == 64);
    CHECK(fixed.e_D == 60);
    CHECK(fixed.c2_dot_D == 32);
    CHECK(fixed.constraint_sum == 0);
    CHECK_FALSE(fixed.constraint_closes);
    CHECK_FALSE(fixed.closed());

    const auto six = euler_ledger(parse_extras("6x(1,2)"));
    CHECK(six.constraint_sum == 12);
    CHECK(six.sum_mu == 6);
    CHECK(six.e_B == 28);
    CHECK(six.e_Z4 == 10);
    CHECK(six.closed());

    const auto one = euler_ledger({{10, 3}});
    CHECK(one.constraint_sum == 12);
    CHECK(one.constraint_closes);

    const auto five = euler_ledger(parse_extras("5x(1,2)"));
    CHECK_FALSE(five.closed());
}

TEST_CASE("extras parsing") {
    CHECK(parse_extras("").empty());
    CHECK(parse_extras("none").empty());
    auto e = parse_extras("2x(1,2),(3,2)");
    REQUIRE(e.size() == 3);
    CHECK(e[2].mu == 3);
    CHECK(e[2].e_beta == 2);
    CHECK_THROWS_AS(parse_extras("6y(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_extras("(1,"), std::invalid_argument);
}

TEST_CASE("ledger definitions") {
    for (const auto& n : builtin_ledger_names()) {
        const auto& L = builtin_ledger(n);
        CHECK(L.consistency_issues().empty());
        const auto round = Ledger::from_json(L.to_json());
        CHECK(round.generators() == L.generators());
    }
    CHECK_THROWS_AS(builtin_ledger("nope"), LedgerError);
    CHECK_THROWS_AS(Ledger::from_json(nlohmann::json{{"name", "x"}}), LedgerError);
}

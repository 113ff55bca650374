#include "branchdiv/cli/app.hpp"
#include "branchdiv/cli/report.hpp"
#include "branchdiv/cli/spec_file.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace branchdiv;
using namespace branchdiv::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "branchdiv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BD_TEST_DATA) + "/" + name; }

} // namespace

TEST_CASE("spec files") {
    auto sf = parse_spec_text("f = [0,0,0,0,1]\nQ = [1,2,3,4,5,6,7,8,9,10,11,12,13,14,15]\n");
    CHECK(sf.has_coefficients);
    CHECK(sf.spec.f[4] == 1);
    CHECK(sf.spec.q[14] == 15);
    CHECK(sf.jet_order == 8);
    CHECK(sf.degree_cap == 4);
    CHECK(sf.charts.size() == 2);

    sf = parse_spec_text("f = [0, 0, 0, \"0.5\", 1]  # comment\nq = [\"1/3\",0,0,0,0,1,0,0,0,1,0,0,1,0,1]\njet_order = 10\ncharts = \"z2\"\n");
    CHECK(sf.spec.f[3] == Rational(1, 2));
    CHECK(sf.spec.q[0] == Rational(1, 3));
    CHECK(sf.jet_order == 10);
    REQUIRE(sf.charts.size() == 1);
    CHECK(sf.charts[0] == scroll::Chart::Z2);

    sf = parse_spec_text("seed = 11\n");
    CHECK_FALSE(sf.has_coefficients);
    CHECK(sf.seed == std::optional<std::uint64_t>(11));

    const auto spec = branch::random_spec(6);
    const auto back = parse_spec_text(write_spec(spec));
    CHECK(back.spec.f == spec.f);
    CHECK(back.spec.q == spec.q);
}

TEST_CASE("spec file errors name the field") {
    auto fails = [](const std::string& text, const std::string& field, int line) {
        try {
            parse_spec_text(text);
        } catch (const ParseError& e) {
            CHECK(e.field == field);
            CHECK(e.line == line);
            return;
        }
        FAIL("no error for: " << text);
    };
    fails("f = [1,2,3,4]\nQ = [1,0,0,0,0,1,0,0,0,1,0,0,1,0,1]\n", "f", 1);
    fails("f = [1,2,3,4,5]\nQ = [1,0,0]\n", "Q", 2);
    fails("f = [1,2,x,4,5]\nQ = [1,0,0,0,0,1,0,0,0,1,0,0,1,0,1]\n", "f", 1);
    fails("f = [1,2,3,4,5]\n", "Q", 0);
    fails("f = [1,2,3,4,5]\nf = [1,2,3,4,5]\n", "f", 2);
    fails("seed = 1\ncolour = 3\n", "colour", 2);
    fails("seed = 1\njet_order = 2\n", "jet_order", 2);
    fails("seed = -1\n", "seed", 1);
    fails("seed = 1\nformat = \"xml\"\n", "format", 2);
    fails("\n\n", "f", 0);
    CHECK_THROWS_AS(parse_spec("/nonexistent/spec.toml"), ParseError);
}

TEST_CASE("rationals are serialized as strings") {
    CHECK(rational_json(Rational(3, 4)) == Json("3/4"));
    CHECK(rational_json(Rational(-2)) == Json("-2"));
}

TEST_CASE("lattice command") {
    const auto r = run({"lattice", "(2K-C1-C1bar)^2", "--ring", "picS"});
    CHECK(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["lattice"]["value"] == "2");
}

TEST_CASE("ledger command") {
    auto r = run({"ledger", "--extras", "6x(1,2)"});
    REQUIRE(r.code == kOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ledger"]["constraint_sum"] == 12);
    CHECK(j["ledger"]["e_Z4"] == 10);
    CHECK(j["ledger"]["e_B"] == 28);
    CHECK(j["ledger"]["closed"] == true);

    r = run({"ledger"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["ledger"]["closed"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run({"curves", data("degenerate_scroll_q.toml")}).code == kDegenerate);
    CHECK(run({"sing", data("nonisolated.toml")}).code == kDegenerate);
    CHECK(run({"curves", data("bad_arity.toml")}).code == kParse);
    CHECK(run({"curves"}).code == kParse);
    CHECK(run({"lattice", "C1.foo"}).code == kParse);
    CHECK(run({"lattice", "C1", "--ring", "nope"}).code == kParse);
    CHECK(run({"ledger", "--extras", "6y(1,2)"}).code == kParse);
    CHECK(run({"bogus"}).code == kParse);
    const auto r = run({"curves", data("degenerate_scroll_q.toml")});
    CHECK(r.err.find("[branchfamily]") != std::string::npos);
    CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("text output") {
    const auto r = run({"moduli", "--seed", "2", "--format", "text"});
    REQUIRE(r.code == kOk);
    CHECK(r.out.find("effective: 15") != std::string::npos);
    CHECK(r.out.find("chain: 20 -> 15 -> 15 - 6 = 9") != std::string::npos);
}

TEST_CASE("sing on a fixed spec") {
    const auto r = run({"sing", data("oracle_spec_1.toml")});
    REQUIRE(r.code == kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["census"]["a1_curve_pairs"] == 24);
    CHECK(j["census"]["a3_ridge"] == 2);
    CHECK(j["census"]["extras"].empty());
    // no floating point anywhere
    CHECK(r.out.find('.') == std::string::npos);
}

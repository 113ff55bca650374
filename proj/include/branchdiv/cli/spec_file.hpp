#pragma once

#include "branchdiv/branch/spec.hpp"
#include "branchdiv/scroll/scroll.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchdiv::cli {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, std::string field)
        : std::runtime_error(msg), line(line), field(std::move(field)) {}
    int line = 0; // 0: not tied to a line
    std::string field;
};

// Flat key = value file:
//   f = [0, 0, 0, 1, 1]
//   Q = [1, 0, "1/2", ...]        # 15 entries, order q00 q01 .. q44
//   seed = 7                      # used when f and Q are absent
//   jet_order = 8
//   degree_cap = 4
//   charts = "all"                # or "z1", "z2"
//   format = "json"               # or "text"
struct SpecFile {
    branch::BranchSpec spec;
    bool has_coefficients = false;
    std::optional<std::uint64_t> seed;
    int jet_order = 8;
    int degree_cap = 4;
    std::vector<scroll::Chart> charts{scroll::Chart::Z1, scroll::Chart::Z2};
    std::string format = "json";
};

SpecFile parse_spec_text(const std::string& text);
SpecFile parse_spec(const std::string& path);

// Spec as a file body that parse_spec_text reads back.
std::string write_spec(const branch::BranchSpec& spec);

} // namespace branchdiv::cli

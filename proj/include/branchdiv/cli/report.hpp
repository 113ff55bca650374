#pragma once

#include "branchdiv/branch/appendix.hpp"
#include "branchdiv/branch/curves.hpp"
#include "branchdiv/branch/singular.hpp"
#include "branchdiv/lattice/euler.hpp"
#include "branchdiv/moduli/moduli.hpp"
#include "branchdiv/quadric/quadric.hpp"

#include <json.hpp>

#include <string>

namespace branchdiv::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& q); // "p/q" or "p"
// Coefficient vector in the generator t of the field, plus its minimal polynomial.
Json field_elem_json(const FieldElem& a);
Json point_json(const ClosedPoint& p);
Json spec_json(const branch::BranchSpec& spec);
Json genericity_json(const branch::GenericityReport& g);

Json curves_json(const std::vector<branch::DoubleCurve>& curves);
Json points_json(const branch::IntersectionReport& rep);
Json milnor_json(const branch::MilnorReport& m);
Json census_json(const branch::Census& c);
Json euler_json(const lattice::EulerLedger& e);
Json extras_json(const std::vector<lattice::ExtraSingularity>& extras);
Json quadric_json(const branch::BranchSpec& spec);
Json moduli_json(const branch::BranchSpec& spec);
Json appendix_json(const branch::AppendixReport& r);
Json lattice_json(const std::string& ring, const std::string& expr);

// Indented key: value rendering of a report.
std::string text_summary(const Json& report);

} // namespace branchdiv::cli

#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "qsim/checks.hpp"
#include "qsim/model.hpp"

namespace qsim {

// Ordered JSON keeps key order stable, so identical inputs render
// byte-identical reports.
using Json = nlohmann::ordered_json;

// {"exact": "7/5", "decimal": "1.400000"}
Json to_json(const Rational& r);
Json to_json(const SwitchConfig& config);
Json to_json(const Verdict& v);
Json to_json(const CheckSummary& s);
Json to_json(const BenefitReport& r);
// Run summary: counts, benefit, final occupancy. Not the per-event log.
Json to_json(const Transcript& t);

// Sweep row format: seed,m,caps,ratio,bound,slack,verdict. Caps are joined
// with '|' to keep the row comma-safe.
std::string csv_header();
std::string csv_row(std::uint64_t seed, const SwitchConfig& config, const BenefitReport& report);

}  // namespace qsim

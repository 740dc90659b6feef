#ifndef ALPHAGATE_REPORT_JSON_HPP
#define ALPHAGATE_REPORT_JSON_HPP

#include <json.hpp>

#include "alphagate/lint.hpp"
#include "alphagate/model.hpp"
#include "alphagate/monte_carlo.hpp"

namespace alphagate {

// JSON report schema version; bumped on any breaking output change.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const FamilyDecision& decision);
nlohmann::json to_json(const LintFinding& finding);
nlohmann::json to_json(const LintResult& result);
nlohmann::json to_json(const ReclassificationReport& report);
nlohmann::json to_json(const SimulationReport& report);

// Parses the simulate configuration document (keys k, effect_sizes, rho,
// policy, nominal_alpha, replications, seed, threads). Throws
// std::invalid_argument on malformed input.
SimulationConfig parse_simulation_config(const std::string& json_text);

}  // namespace alphagate

#endif

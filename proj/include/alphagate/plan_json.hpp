#ifndef ALPHAGATE_PLAN_JSON_HPP
#define ALPHAGATE_PLAN_JSON_HPP

#include <stdexcept>
#include <string>

#include "alphagate/model.hpp"

namespace alphagate {

class PlanParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strict parser for the plan document format: top-level keys schema_version,
// hypotheses, families, reported_inferences (and optional nominal_alpha);
// unknown keys are rejected. Throws PlanParseError; does NOT run
// validate_plan, so structurally parseable but invalid plans can still be
// inspected.
TestingPlan parse_plan(const std::string& json_text);

// Inverse of parse_plan: parse_plan(emit_plan(p)) == p for valid plans.
std::string emit_plan(const TestingPlan& plan);

}  // namespace alphagate

#endif

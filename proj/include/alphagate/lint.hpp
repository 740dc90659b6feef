#ifndef ALPHAGATE_LINT_HPP
#define ALPHAGATE_LINT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alphagate/model.hpp"

namespace alphagate {

enum class LintCode {
  RedundantCorrection,
  MissingAdjustment,
  ConfusionI,
  ConfusionII,
  ConfusionIII,
  HypothesisFreeFwer,
};

const char* to_string(LintCode c);

struct LintFinding {
  LintCode code;
  std::string target;  // family id or claim reference
  std::string explanation;
  std::map<std::string, double> quantities;
  std::vector<std::string> affected_members;  // e.g. decisions lost to a redundant correction
};

struct LintResult {
  std::vector<LintFinding> findings;
  // Informational observations that are not diagnoses.
  std::vector<std::string> notes;
};

// Diagnoses redundant corrections (adjusting policy, individual-only claims),
// missing adjustments (joint claim at an unadjusted alpha, k >= 2), and
// corrections applied across separate individual inferences (Confusion III).
// Findings are sorted by family id; identical plans yield identical results.
LintResult lint_plan(const TestingPlan& plan);

enum class RateType { Fwer, Pfer };
enum class InflationClaim { None, IndividualRate, FamilyRate };

// A researcher's own description of their testing setup, for classifying
// error-rate confusions independently of any concrete plan.
struct DescribedAnalysis {
  int n_inferences = 1;
  int tests_per_inference = 1;
  int k_used_for_correction = 1;
  RateType rate_type = RateType::Fwer;
  double alpha = 0.05;
  InflationClaim claim = InflationClaim::None;
};

std::optional<LintFinding> classify_confusion(const DescribedAnalysis& analysis);

struct ReclassificationReport {
  std::string family_id;
  FamilyDecision joint;
  FamilyDecision individual;
  FamilyDecision hybrid;
  std::string narrative;
};

// Evaluates the family under all three decision bases and summarizes how the
// support label depends on the basis.
ReclassificationReport reclassify(const Family& family, const TestingPlan& plan);

}  // namespace alphagate

#endif

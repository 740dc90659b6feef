#include "alphagate/casebook.hpp"

#include <stdexcept>

#include "alphagate/plan_json.hpp"

namespace alphagate {

namespace {

// Fixtures are stored in the plan document format and go through the same
// parser as user-supplied plans.

const char* kGenderExamplePlan = R"({
  "schema_version": 1,
  "nominal_alpha": 0.05,
  "hypotheses": [
    {"id": "biology", "label": "gender difference in attitudes towards biology", "p_value": 0.011},
    {"id": "chemistry", "label": "gender difference in attitudes towards chemistry", "p_value": 0.979},
    {"id": "physics", "label": "gender difference in attitudes towards physics", "p_value": 0.150}
  ],
  "families": [
    {"id": "stem_attitudes", "members": ["biology", "chemistry", "physics"],
     "mode": "union_intersection", "policy": {"kind": "sidak", "alpha": 0.05}}
  ],
  "reported_inferences": [
    {"target": "stem_attitudes", "claimed_alpha": 0.05, "claimed_outcome": "reject"}
  ]
})";

const char* kPremPlan = R"({
  "schema_version": 1,
  "nominal_alpha": 0.05,
  "hypotheses": [
    {"id": "telework_other", "label": "planning of working places vs telework from other locations",
     "p_band": {"lower": 0.0, "upper": 0.025}},
    {"id": "telework_home", "label": "planning of working places vs telework from home",
     "p_band": {"lower": 0.025, "upper": 0.050}}
  ],
  "families": [
    {"id": "h4", "members": ["telework_other", "telework_home"],
     "mode": "union_intersection", "policy": {"kind": "bonferroni", "alpha": 0.05}}
  ],
  "reported_inferences": [
    {"target": "telework_other", "claimed_alpha": 0.025, "claimed_outcome": "reject"},
    {"target": "telework_home", "claimed_alpha": 0.025, "claimed_outcome": "fail_to_reject"}
  ]
})";

const char* kClemensPlan = R"({
  "schema_version": 1,
  "nominal_alpha": 0.05,
  "hypotheses": [
    {"id": "deceptive", "label": "evasive strategy judged deceptive, unlawful vs lawful",
     "p_band": {"lower": 0.0, "upper": 0.001}},
    {"id": "reluctant", "label": "reluctant information sharing, unlawful vs lawful",
     "p_value": 0.042}
  ],
  "families": [
    {"id": "h1b", "members": ["deceptive", "reluctant"],
     "mode": "union_intersection", "policy": {"kind": "bonferroni", "alpha": 0.05}}
  ],
  "reported_inferences": [
    {"target": "deceptive", "claimed_alpha": 0.025, "claimed_outcome": "reject"},
    {"target": "reluctant", "claimed_alpha": 0.025, "claimed_outcome": "fail_to_reject"}
  ]
})";

const char* kJanssenPlan = R"({
  "schema_version": 1,
  "nominal_alpha": 0.05,
  "hypotheses": [
    {"id": "judgments", "label": "blocked vs interleaved: prospective judgments of learning",
     "p_value": 0.003},
    {"id": "outcomes", "label": "blocked vs interleaved: actual learning outcomes",
     "p_value": 0.048}
  ],
  "families": [
    {"id": "exp2", "members": ["judgments", "outcomes"],
     "mode": "union_intersection", "policy": {"kind": "bonferroni", "alpha": 0.05}}
  ],
  "reported_inferences": [
    {"target": "judgments", "claimed_alpha": 0.025, "claimed_outcome": "reject"},
    {"target": "outcomes", "claimed_alpha": 0.025, "claimed_outcome": "fail_to_reject"}
  ]
})";

struct RawCase {
  const char* id;
  const char* plan_json;
  Support joint;
  Support individual;
  Support hybrid;
  const char* provenance;
};

const RawCase kCases[] = {
    {"gender_example", kGenderExamplePlan, Support::Full, Support::Partial, Support::Partial,
     "Worked example: gender differences in attitudes towards three STEM subjects, "
     "t(326) tests with p = 0.011, 0.979, 0.150; Dunn-Sidak adjusted alpha for a joint "
     "inference at 0.050."},
    {"prem_2021_h4", kPremPlan, Support::Full, Support::Full, Support::Partial,
     "Prem et al. (2021), Study 1, Hypothesis 4: two correlations tested with a "
     "Bonferroni-corrected alpha of 0.05/2 = 0.025; one correlation significant at the "
     "0.025 level, the other between 0.025 and 0.050; hypothesis reported as partially "
     "supported."},
    {"clemens_2023_h1b", kClemensPlan, Support::Full, Support::Full, Support::Partial,
     "Clemens & Grolig (2023), hypothesis 1b: chi-square tests with a Bonferroni-corrected "
     "significance level (0.05/2) of 0.025; p < 0.001 and p = 0.042; results reported as "
     "only partially in line with the hypothesis."},
    {"janssen_2023_exp2", kJanssenPlan, Support::Full, Support::Full, Support::Partial,
     "Janssen et al. (2023), Experiment 2: independent t-tests with a Bonferroni-corrected "
     "significance level of 0.025 (0.05/2); p = 0.003 and p = 0.048; only the first "
     "reported as significant."},
};

}  // namespace

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& c : kCases) ids.emplace_back(c.id);
  return ids;
}

CaseFixture load_case(const std::string& case_id) {
  for (const auto& c : kCases) {
    if (case_id == c.id) {
      CaseFixture fixture;
      fixture.case_id = c.id;
      fixture.plan = parse_plan(c.plan_json);
      fixture.expected = {{DecisionBasis::JointUnionIntersection, c.joint},
                          {DecisionBasis::IndividualAtNominal, c.individual},
                          {DecisionBasis::HybridAsReported, c.hybrid}};
      fixture.provenance = c.provenance;
      return fixture;
    }
  }
  throw std::invalid_argument("unknown case id '" + case_id + "'");
}

CaseResult run_case(const std::string& case_id) {
  CaseResult result;
  result.fixture = load_case(case_id);
  const Family& family = result.fixture.plan.families.at(0);
  result.report = reclassify(family, result.fixture.plan);
  result.lint = lint_plan(result.fixture.plan);
  return result;
}

}  // namespace alphagate

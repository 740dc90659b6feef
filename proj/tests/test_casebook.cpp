#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alphagate/casebook.hpp"
#include "alphagate/plan_json.hpp"

using namespace alphagate;

namespace {

bool has_redundant(const LintResult& lint) {
  for (const auto& f : lint.findings)
    if (f.code == LintCode::RedundantCorrection) return true;
  return false;
}

void check_expected(const CaseResult& result) {
  const auto& expected = result.fixture.expected;
  CHECK(result.report.joint.support == expected.at(DecisionBasis::JointUnionIntersection));
  CHECK(result.report.individual.support == expected.at(DecisionBasis::IndividualAtNominal));
  CHECK(result.report.hybrid.support == expected.at(DecisionBasis::HybridAsReported));
}

}  // namespace

TEST_CASE("case ids") {
  const auto ids = case_ids();
  REQUIRE(ids.size() == 4);
  CHECK_THROWS_AS(load_case("foo"), std::invalid_argument);
}

TEST_CASE("all fixtures validate and round-trip through the plan format") {
  for (const auto& id : case_ids()) {
    const CaseFixture fixture = load_case(id);
    CHECK(validate_plan(fixture.plan).empty());
    CHECK(fixture.expected.size() == 3);
    CHECK(!fixture.provenance.empty());
    CHECK(emit_plan(parse_plan(emit_plan(fixture.plan))) == emit_plan(fixture.plan));
  }
}

TEST_CASE("gender example: joint full, no redundancy finding") {
  const CaseResult result = run_case("gender_example");
  check_expected(result);
  CHECK(result.report.joint.support == Support::Full);
  CHECK(result.report.joint.joint_outcome == Outcome::Reject);
  CHECK(!has_redundant(result.lint));
}

TEST_CASE("prem_2021_h4: hybrid partial, joint and individual full, redundant") {
  const CaseResult result = run_case("prem_2021_h4");
  check_expected(result);
  CHECK(result.report.hybrid.support == Support::Partial);
  CHECK(result.report.joint.support == Support::Full);
  CHECK(result.report.individual.support == Support::Full);
  CHECK(has_redundant(result.lint));
}

TEST_CASE("clemens_2023_h1b golden") {
  const CaseResult result = run_case("clemens_2023_h1b");
  check_expected(result);
  CHECK(result.report.hybrid.support == Support::Partial);
  CHECK(has_redundant(result.lint));
}

TEST_CASE("janssen_2023_exp2 golden") {
  const CaseResult result = run_case("janssen_2023_exp2");
  check_expected(result);
  CHECK(result.report.joint.support == Support::Full);
  CHECK(result.report.individual.support == Support::Full);
  CHECK(result.report.hybrid.support == Support::Partial);
  CHECK(has_redundant(result.lint));
}

TEST_CASE("re-running a case is idempotent") {
  const CaseResult a = run_case("janssen_2023_exp2");
  const CaseResult b = run_case("janssen_2023_exp2");
  CHECK(emit_plan(a.fixture.plan) == emit_plan(b.fixture.plan));
  CHECK(a.report.narrative == b.report.narrative);
  CHECK(a.lint.findings.size() == b.lint.findings.size());
}

TEST_CASE("prem bands drive an indeterminate hybrid member at mismatched alpha") {
  // the second correlation's band [.025,.050) resolves cleanly at .025 and .05
  const CaseFixture fixture = load_case("prem_2021_h4");
  CHECK(fixture.plan.hypotheses[1].p_band.has_value());
  CHECK(fixture.plan.hypotheses[1].p_band->lower == 0.025);
  CHECK(fixture.plan.hypotheses[1].p_band->upper == 0.050);
}

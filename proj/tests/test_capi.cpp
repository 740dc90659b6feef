#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "alphagate.h"

using nlohmann::json;

namespace {

const char* kJanssenPlan = R"({
  "schema_version": 1,
  "hypotheses": [
    {"id": "judgments", "p_value": 0.003},
    {"id": "outcomes", "p_value": 0.048}
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

json take(char* s) {
  REQUIRE(s != nullptr);
  json doc = json::parse(s);
  ag_string_free(s);
  return doc;
}

}  // namespace

TEST_CASE("scalar rate functions") {
  double out = 0.0;
  CHECK(ag_fwer_independent(0.05, 3, &out) == AG_OK);
  CHECK(out == doctest::Approx(0.142625).epsilon(1e-6));
  CHECK(ag_sidak_adjust(0.05, 3, &out) == AG_OK);
  CHECK(out == doctest::Approx(0.0169524).epsilon(1e-5));
  CHECK(ag_bonferroni_adjust(0.05, 2, &out) == AG_OK);
  CHECK(out == 0.025);
  CHECK(ag_pfer(0.05, 100, &out) == AG_OK);
  CHECK(out == doctest::Approx(5.0));
  CHECK(ag_analytic_power(2.80158, 0.05, &out) == AG_OK);
  CHECK(out == doctest::Approx(0.800).epsilon(1e-3));
}

TEST_CASE("scalar error paths") {
  double out = 0.0;
  CHECK(ag_fwer_independent(1.5, 3, &out) == AG_ERR_ARGUMENT);
  CHECK(std::strlen(ag_last_error()) > 0);
  CHECK(ag_sidak_adjust(0.05, 0, &out) == AG_ERR_ARGUMENT);
  CHECK(ag_fwer_independent(0.05, 3, nullptr) == AG_ERR_ARGUMENT);
  // success clears the thread-local error
  CHECK(ag_fwer_independent(0.05, 3, &out) == AG_OK);
  CHECK(std::strlen(ag_last_error()) == 0);
}

TEST_CASE("plan lifecycle: parse, emit, decide, lint") {
  ag_plan* plan = nullptr;
  REQUIRE(ag_plan_parse(kJanssenPlan, &plan) == AG_OK);
  REQUIRE(plan != nullptr);

  char* out = nullptr;
  REQUIRE(ag_plan_emit(plan, &out) == AG_OK);
  const json emitted = take(out);
  CHECK(emitted.at("families").size() == 1);

  REQUIRE(ag_plan_decide(plan, "all", &out) == AG_OK);
  const json all = take(out);
  const auto& decisions = all.at("reclassifications").at(0).at("decisions");
  CHECK(decisions.at("joint").at("support") == "full");
  CHECK(decisions.at("individual").at("support") == "full");
  CHECK(decisions.at("hybrid").at("support") == "partial");

  REQUIRE(ag_plan_decide(plan, "hybrid", &out) == AG_OK);
  const json hybrid = take(out);
  CHECK(hybrid.at("decisions").at(0).at("support") == "partial");

  CHECK(ag_plan_decide(plan, "bogus", &out) == AG_ERR_ARGUMENT);

  REQUIRE(ag_plan_lint(plan, &out) == AG_OK);
  const json lint = take(out);
  REQUIRE(lint.at("findings").size() == 1);
  CHECK(lint.at("findings").at(0).at("code") == "REDUNDANT_CORRECTION");
  CHECK(lint.at("findings").at(0).at("quantities").at("power_cost") == 1.0);

  ag_plan_free(plan);
}

TEST_CASE("parse and validation failures") {
  ag_plan* plan = nullptr;
  CHECK(ag_plan_parse("not json", &plan) == AG_ERR_PARSE);
  CHECK(plan == nullptr);

  const char* invalid = R"({"schema_version":1,
    "hypotheses":[{"id":"a","p_value":0.0}],
    "families":[{"id":"F","members":["a"],"mode":"individual",
                 "policy":{"kind":"unadjusted","alpha":0.05}}],
    "reported_inferences":[]})";
  CHECK(ag_plan_parse(invalid, &plan) == AG_ERR_VALIDATION);
  CHECK(std::string(ag_last_error()).find("p_value") != std::string::npos);
}

TEST_CASE("missing p-value maps to its own status") {
  const char* no_p = R"({"schema_version":1,
    "hypotheses":[{"id":"a"}],
    "families":[{"id":"F","members":["a"],"mode":"individual",
                 "policy":{"kind":"unadjusted","alpha":0.05}}],
    "reported_inferences":[]})";
  ag_plan* plan = nullptr;
  REQUIRE(ag_plan_parse(no_p, &plan) == AG_OK);
  char* out = nullptr;
  CHECK(ag_plan_decide(plan, "individual", &out) == AG_ERR_MISSING_PVALUE);
  CHECK(std::string(ag_last_error()).find("'a'") != std::string::npos);
  ag_plan_free(plan);
}

TEST_CASE("simulate via C API is deterministic") {
  const char* config = R"({"k":3,"policy":{"kind":"unadjusted","alpha":0.05},
                           "replications":20000,"seed":42})";
  char* out = nullptr;
  REQUIRE(ag_simulate(config, &out) == AG_OK);
  const std::string first = out;
  ag_string_free(out);
  REQUIRE(ag_simulate(config, &out) == AG_OK);
  const std::string second = out;
  ag_string_free(out);
  CHECK(first == second);

  const json doc = json::parse(first);
  CHECK(doc.at("config").at("seed") == 42);
  CHECK(std::fabs(doc.at("empirical_fwer").at("estimate").get<double>() - 0.142625) <
        3 * doc.at("empirical_fwer").at("se").get<double>());

  CHECK(ag_simulate(R"({"k":0})", &out) == AG_ERR_ARGUMENT);
  CHECK(ag_simulate("nope", &out) == AG_ERR_ARGUMENT);
}

TEST_CASE("casebook surface") {
  char* out = nullptr;
  REQUIRE(ag_case_list(&out) == AG_OK);
  const json ids = take(out);
  CHECK(ids.size() == 4);

  REQUIRE(ag_case_run("janssen_2023_exp2", &out) == AG_OK);
  const json doc = take(out);
  CHECK(doc.at("expected").at("hybrid") == "partial");
  CHECK(doc.at("reclassification").at("decisions").at("hybrid").at("support") == "partial");

  CHECK(ag_case_run("nope", &out) == AG_ERR_UNKNOWN_CASE);
}

TEST_CASE("version and status names") {
  CHECK(std::strlen(ag_version()) > 0);
  CHECK(std::string(ag_status_name(AG_OK)) == "AG_OK");
  CHECK(std::string(ag_status_name(AG_ERR_MISSING_PVALUE)) == "AG_ERR_MISSING_PVALUE");
}

#include "alphagate.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "alphagate/casebook.hpp"
#include "alphagate/decision.hpp"
#include "alphagate/error_rates.hpp"
#include "alphagate/lint.hpp"
#include "alphagate/model.hpp"
#include "alphagate/monte_carlo.hpp"
#include "alphagate/normal.hpp"
#include "alphagate/plan_json.hpp"
#include "alphagate/report_json.hpp"

struct ag_plan {
  alphagate::TestingPlan plan;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ag_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const alphagate::PlanParseError& e) {
    set_error(e.what());
    return AG_ERR_PARSE;
  } catch (const alphagate::MissingPValueError& e) {
    set_error(e.what());
    return AG_ERR_MISSING_PVALUE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return AG_ERR_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return AG_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return AG_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return AG_ERR_INTERNAL;
  }
}

ag_status scalar_op(double* out, double (*fn)(double, long), double a, long k) {
  if (!out) {
    g_last_error = "null output pointer";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out = fn(a, k);
    return AG_OK;
  });
}

ag_status emit(char** out_json, const nlohmann::json& doc) {
  *out_json = dup_string(doc.dump(2));
  return *out_json ? AG_OK : AG_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* ag_version(void) { return "1.0.0"; }

const char* ag_status_name(ag_status status) {
  switch (status) {
    case AG_OK: return "AG_OK";
    case AG_ERR_ARGUMENT: return "AG_ERR_ARGUMENT";
    case AG_ERR_PARSE: return "AG_ERR_PARSE";
    case AG_ERR_VALIDATION: return "AG_ERR_VALIDATION";
    case AG_ERR_MISSING_PVALUE: return "AG_ERR_MISSING_PVALUE";
    case AG_ERR_UNKNOWN_CASE: return "AG_ERR_UNKNOWN_CASE";
    case AG_ERR_INTERNAL: return "AG_ERR_INTERNAL";
  }
  return "AG_ERR_INTERNAL";
}

const char* ag_last_error(void) { return g_last_error.c_str(); }

void ag_string_free(char* s) { std::free(s); }

ag_status ag_fwer_independent(double alpha, long k, double* out) {
  return scalar_op(out, alphagate::fwer_independent, alpha, k);
}

ag_status ag_pfer(double alpha, long k, double* out) {
  return scalar_op(out, alphagate::pfer, alpha, k);
}

ag_status ag_sidak_adjust(double alpha_joint, long k, double* out) {
  return scalar_op(out, alphagate::sidak_adjust, alpha_joint, k);
}

ag_status ag_bonferroni_adjust(double alpha_joint, long k, double* out) {
  return scalar_op(out, alphagate::bonferroni_adjust, alpha_joint, k);
}

ag_status ag_analytic_power(double delta, double alpha, double* out) {
  if (!out) {
    g_last_error = "null output pointer";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out = alphagate::analytic_power(delta, alpha);
    return AG_OK;
  });
}

ag_status ag_plan_parse(const char* json_text, ag_plan** out_plan) {
  if (!json_text || !out_plan) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&]() -> ag_status {
    alphagate::TestingPlan plan = alphagate::parse_plan(json_text);
    auto errors = alphagate::validate_plan(plan);
    if (!errors.empty()) {
      std::string message = "plan validation failed:";
      for (const auto& e : errors) message += "\n  " + alphagate::to_string(e);
      set_error(message);
      return AG_ERR_VALIDATION;
    }
    *out_plan = new ag_plan{std::move(plan)};
    return AG_OK;
  });
}

void ag_plan_free(ag_plan* plan) { delete plan; }

ag_status ag_plan_emit(const ag_plan* plan, char** out_json) {
  if (!plan || !out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out_json = dup_string(alphagate::emit_plan(plan->plan));
    return *out_json ? AG_OK : AG_ERR_INTERNAL;
  });
}

ag_status ag_plan_decide(const ag_plan* plan, const char* basis, char** out_json) {
  if (!plan || !basis || !out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&]() -> ag_status {
    const std::string basis_name = basis;
    nlohmann::json doc;
    doc["schema_version"] = alphagate::kReportSchemaVersion;
    if (basis_name == "all") {
      doc["reclassifications"] = nlohmann::json::array();
      for (const auto& family : plan->plan.families)
        doc["reclassifications"].push_back(
            alphagate::to_json(alphagate::reclassify(family, plan->plan)));
    } else {
      alphagate::DecisionBasis b;
      if (basis_name == "joint")
        b = alphagate::DecisionBasis::JointUnionIntersection;
      else if (basis_name == "individual")
        b = alphagate::DecisionBasis::IndividualAtNominal;
      else if (basis_name == "hybrid")
        b = alphagate::DecisionBasis::HybridAsReported;
      else
        throw std::invalid_argument("unknown basis '" + basis_name + "'");
      doc["decisions"] = nlohmann::json::array();
      for (const auto& family : plan->plan.families)
        doc["decisions"].push_back(
            alphagate::to_json(alphagate::evaluate_family(family, plan->plan, b)));
    }
    return emit(out_json, doc);
  });
}

ag_status ag_plan_lint(const ag_plan* plan, char** out_json) {
  if (!plan || !out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] { return emit(out_json, alphagate::to_json(alphagate::lint_plan(plan->plan))); });
}

ag_status ag_simulate(const char* config_json, char** out_json) {
  if (!config_json || !out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] {
    alphagate::SimulationConfig config = alphagate::parse_simulation_config(config_json);
    return emit(out_json, alphagate::to_json(alphagate::simulate_rates(config)));
  });
}

ag_status ag_case_list(char** out_json) {
  if (!out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  return guarded([&] {
    nlohmann::json doc = alphagate::case_ids();
    return emit(out_json, doc);
  });
}

ag_status ag_case_run(const char* case_id, char** out_json) {
  if (!case_id || !out_json) {
    g_last_error = "null argument";
    return AG_ERR_ARGUMENT;
  }
  g_last_error.clear();
  try {
    alphagate::CaseResult result = alphagate::run_case(case_id);
    nlohmann::json doc;
    doc["schema_version"] = alphagate::kReportSchemaVersion;
    doc["case_id"] = result.fixture.case_id;
    doc["provenance"] = result.fixture.provenance;
    doc["expected"] = {
        {"joint", alphagate::to_string(
                      result.fixture.expected.at(alphagate::DecisionBasis::JointUnionIntersection))},
        {"individual", alphagate::to_string(
                           result.fixture.expected.at(alphagate::DecisionBasis::IndividualAtNominal))},
        {"hybrid", alphagate::to_string(
                       result.fixture.expected.at(alphagate::DecisionBasis::HybridAsReported))}};
    doc["reclassification"] = alphagate::to_json(result.report);
    doc["lint"] = alphagate::to_json(result.lint);
    doc["plan"] = nlohmann::json::parse(alphagate::emit_plan(result.fixture.plan));
    return emit(out_json, doc);
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return AG_ERR_UNKNOWN_CASE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return AG_ERR_INTERNAL;
  }
}

}  // extern "C"

// alphagate: multiple-testing inference toolkit front end.
// Talks to the library exclusively through the C API in alphagate.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphagate.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitIncompleteData = 3;

int exit_code_for(ag_status status) {
  return status == AG_ERR_MISSING_PVALUE ? kExitIncompleteData : kExitUsage;
}

[[noreturn]] void fail(ag_status status) {
  std::cerr << "error: " << ag_last_error() << "\n";
  std::exit(exit_code_for(status));
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(kExitUsage);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json call_json(ag_status (*fn)(const char*, char**), const std::string& arg) {
  char* out = nullptr;
  ag_status status = fn(arg.c_str(), &out);
  if (status != AG_OK) fail(status);
  json doc = json::parse(out);
  ag_string_free(out);
  return doc;
}

struct PlanHandle {
  ag_plan* plan = nullptr;
  ~PlanHandle() { ag_plan_free(plan); }
};

void load_plan(const std::string& path, PlanHandle& handle) {
  const std::string text = read_file(path);
  ag_status status = ag_plan_parse(text.c_str(), &handle.plan);
  if (status != AG_OK) fail(status);
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_estimate_md(std::ostream& os, const char* name, const json& e) {
  os << "| " << name << " | " << fmt6(e.at("estimate").get<double>()) << " | "
     << fmt6(e.at("se").get<double>()) << " | "
     << (e.at("analytic").is_null() ? std::string("-") : fmt6(e.at("analytic").get<double>()))
     << " |\n";
}

void render_decision_md(std::ostream& os, const json& d) {
  os << "- family `" << d.at("family_id").get<std::string>() << "` (basis "
     << d.at("basis").get<std::string>()
     << ", alpha " << fmt6(d.at("resolved_alpha_constituent").get<double>())
     << "): support **" << d.at("support").get<std::string>() << "**";
  if (!d.at("joint_outcome").is_null())
    os << ", joint outcome " << d.at("joint_outcome").get<std::string>();
  os << "\n";
  for (const auto& id : d.at("member_order"))
    os << "    - " << id.get<std::string>() << ": "
       << d.at("per_member_outcome").at(id.get<std::string>()).get<std::string>() << "\n";
  for (const auto& note : d.at("notes")) os << "    - note: " << note.get<std::string>() << "\n";
}

void render_reclassification_md(std::ostream& os, const json& r) {
  os << "## family " << r.at("family_id").get<std::string>() << "\n\n";
  for (const char* basis : {"joint", "individual", "hybrid"})
    render_decision_md(os, r.at("decisions").at(basis));
  os << "\n" << r.at("narrative").get<std::string>() << "\n";
}

void render_lint_md(std::ostream& os, const json& doc) {
  const auto& findings = doc.at("findings");
  if (findings.empty()) {
    os << "No findings.\n";
  } else {
    for (const auto& f : findings) {
      os << "- **" << f.at("code").get<std::string>() << "** (" << f.at("target").get<std::string>()
         << "): " << f.at("explanation").get<std::string>() << "\n";
      for (const auto& [key, value] : f.at("quantities").items())
        os << "    - " << key << " = " << fmt6(value.get<double>()) << "\n";
    }
  }
  for (const auto& note : doc.at("notes")) os << "- note: " << note.get<std::string>() << "\n";
}

void render_simulation_md(std::ostream& os, const json& doc) {
  const auto& cfg = doc.at("config");
  os << "Simulation: k=" << cfg.at("k") << ", rho=" << fmt6(cfg.at("rho").get<double>())
     << ", policy=" << cfg.at("policy").at("kind").get<std::string>()
     << "(alpha=" << fmt6(cfg.at("policy").at("alpha").get<double>()) << ")"
     << ", replications=" << cfg.at("replications") << ", seed=" << cfg.at("seed")
     << ", resolved alpha=" << fmt6(doc.at("alpha_resolved").get<double>()) << "\n\n";
  os << "| metric | estimate | se | analytic |\n|---|---|---|---|\n";
  print_estimate_md(os, "fwer", doc.at("empirical_fwer"));
  print_estimate_md(os, "pfer", doc.at("empirical_pfer"));
  const auto& rates = doc.at("per_test_rejection_rates");
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const std::string name = "per_test_rate_" + std::to_string(i);
    print_estimate_md(os, name.c_str(), rates[i]);
  }
  for (const auto& note : doc.at("notes")) os << "\nnote: " << note.get<std::string>() << "\n";
}

void render_simulation_csv(std::ostream& os, const json& doc) {
  const auto& cfg = doc.at("config");
  const std::string prefix = csv_field(cfg.at("k")) + "," + csv_field(cfg.at("rho")) + "," +
                             cfg.at("policy").at("kind").get<std::string>() + "," +
                             csv_field(doc.at("alpha_resolved"));
  const std::string suffix =
      csv_field(cfg.at("replications")) + "," + csv_field(cfg.at("seed"));
  os << "k,rho,policy,alpha_resolved,metric,estimate,se,analytic,replications,seed\n";
  auto row = [&](const std::string& metric, const json& e) {
    os << prefix << "," << metric << "," << csv_field(e.at("estimate")) << ","
       << csv_field(e.at("se")) << "," << csv_field(e.at("analytic")) << "," << suffix << "\n";
  };
  row("fwer", doc.at("empirical_fwer"));
  row("pfer", doc.at("empirical_pfer"));
  const auto& rates = doc.at("per_test_rejection_rates");
  for (std::size_t i = 0; i < rates.size(); ++i)
    row("per_test_rate_" + std::to_string(i), rates[i]);
}

std::vector<double> parse_delta_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: invalid --delta entry '" << item << "'\n";
      std::exit(kExitUsage);
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alphagate: decides when alpha adjustments are required, lints testing "
               "plans for redundant corrections, and verifies error rates by simulation"};
  app.require_subcommand(1);

  std::string format = "json";

  // adjust
  auto* adjust = app.add_subcommand("adjust", "Compute an adjusted per-test alpha");
  double alpha_joint = 0.05;
  long k = 1;
  std::string method;
  adjust->add_option("--alpha-joint", alpha_joint, "Joint alpha to control")->required();
  adjust->add_option("--k", k, "Number of constituent tests")->required();
  adjust->add_option("--method", method, "sidak or bonferroni")
      ->required()
      ->check(CLI::IsMember({"sidak", "bonferroni"}));
  adjust->add_option("--format", format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));

  // decide
  auto* decide = app.add_subcommand("decide", "Evaluate a plan's families");
  std::string plan_path;
  std::string basis = "all";
  decide->add_option("--plan", plan_path, "Plan document")->required();
  decide->add_option("--basis", basis, "joint, individual, hybrid, or all")
      ->check(CLI::IsMember({"joint", "individual", "hybrid", "all"}));
  decide->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  // lint
  auto* lint = app.add_subcommand("lint", "Diagnose redundant corrections and confusions");
  bool strict = false;
  lint->add_option("--plan", plan_path, "Plan document")->required();
  lint->add_flag("--strict", strict, "Exit 1 when any finding is emitted");
  lint->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo error-rate verification");
  long sim_k = 1;
  double sim_alpha = 0.05;
  std::string policy = "unadjusted";
  double rho = 0.0;
  std::string delta_list;
  std::int64_t reps = 10000;
  std::string seed_text;
  int threads = 0;
  simulate->add_option("--k", sim_k, "Number of tests per family")->required();
  simulate->add_option("--alpha", sim_alpha, "Policy alpha (default 0.05)");
  simulate->add_option("--policy", policy, "unadjusted, sidak, bonferroni, or specified")
      ->check(CLI::IsMember({"unadjusted", "sidak", "bonferroni", "specified"}));
  simulate->add_option("--rho", rho, "Equicorrelation in [0,1)");
  simulate->add_option("--delta", delta_list, "Comma-separated effect sizes (default all zero)");
  simulate->add_option("--reps", reps, "Replications");
  simulate->add_option("--seed", seed_text, "RNG seed (default: ALPHAGATE_SEED env, else 0)");
  simulate->add_option("--threads", threads, "Worker threads (0 = auto; never affects results)");
  simulate->add_option("--format", format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));

  // case
  auto* case_cmd = app.add_subcommand("case", "Run a casebook fixture");
  std::string case_id;
  bool list_cases = false;
  case_cmd->add_option("--id", case_id, "Case id");
  case_cmd->add_flag("--list", list_cases, "List available case ids");
  case_cmd->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (adjust->parsed()) {
    double alpha_c = 0.0;
    ag_status status = method == "sidak" ? ag_sidak_adjust(alpha_joint, k, &alpha_c)
                                         : ag_bonferroni_adjust(alpha_joint, k, &alpha_c);
    if (status != AG_OK) fail(status);
    double fwer = 0.0, pfer_value = 0.0;
    if (ag_fwer_independent(alpha_c, k, &fwer) != AG_OK) fail(AG_ERR_ARGUMENT);
    if (ag_pfer(alpha_c, k, &pfer_value) != AG_OK) fail(AG_ERR_ARGUMENT);
    if (format == "json") {
      json doc = {{"method", method},          {"alpha_joint", alpha_joint},
                  {"k", k},                    {"alpha_constituent", alpha_c},
                  {"fwer", fwer},              {"pfer", pfer_value}};
      std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
      std::cout << "method,alpha_joint,k,alpha_constituent,fwer,pfer\n"
                << method << "," << alpha_joint << "," << k << "," << alpha_c << "," << fwer
                << "," << pfer_value << "\n";
    } else {
      std::cout << "| method | alpha_joint | k | alpha_constituent | fwer | pfer |\n"
                << "|---|---|---|---|---|---|\n"
                << "| " << method << " | " << fmt6(alpha_joint) << " | " << k << " | "
                << fmt6(alpha_c) << " | " << fmt6(fwer) << " | " << fmt6(pfer_value) << " |\n";
    }
    return 0;
  }

  if (decide->parsed()) {
    PlanHandle handle;
    load_plan(plan_path, handle);
    char* out = nullptr;
    ag_status status = ag_plan_decide(handle.plan, basis.c_str(), &out);
    if (status != AG_OK) fail(status);
    json doc = json::parse(out);
    ag_string_free(out);
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ostringstream os;
      if (doc.contains("reclassifications"))
        for (const auto& r : doc.at("reclassifications")) render_reclassification_md(os, r);
      else
        for (const auto& d : doc.at("decisions")) render_decision_md(os, d);
      std::cout << os.str();
    }
    return 0;
  }

  if (lint->parsed()) {
    PlanHandle handle;
    load_plan(plan_path, handle);
    char* out = nullptr;
    ag_status status = ag_plan_lint(handle.plan, &out);
    if (status != AG_OK) fail(status);
    json doc = json::parse(out);
    ag_string_free(out);
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ostringstream os;
      render_lint_md(os, doc);
      std::cout << os.str();
    }
    return (strict && !doc.at("findings").empty()) ? 1 : 0;
  }

  if (simulate->parsed()) {
    if (seed_text.empty()) {
      const char* env = std::getenv("ALPHAGATE_SEED");
      seed_text = env ? env : "0";
    }
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(seed_text);
    } catch (const std::exception&) {
      std::cerr << "error: invalid seed '" << seed_text << "'\n";
      return kExitUsage;
    }
    json config = {{"k", sim_k},
                   {"policy", {{"kind", policy}, {"alpha", sim_alpha}}},
                   {"rho", rho},
                   {"replications", reps},
                   {"seed", seed},
                   {"threads", threads}};
    if (!delta_list.empty()) config["effect_sizes"] = parse_delta_list(delta_list);
    json doc = call_json(ag_simulate, config.dump());
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
      render_simulation_csv(std::cout, doc);
    } else {
      render_simulation_md(std::cout, doc);
    }
    return 0;
  }

  if (case_cmd->parsed()) {
    if (list_cases) {
      char* out = nullptr;
      if (ag_case_list(&out) != AG_OK) fail(AG_ERR_INTERNAL);
      json ids = json::parse(out);
      ag_string_free(out);
      for (const auto& id : ids) std::cout << id.get<std::string>() << "\n";
      return 0;
    }
    if (case_id.empty()) {
      std::cerr << "error: --id is required (or use --list)\n";
      return kExitUsage;
    }
    json doc = call_json(ag_case_run, case_id);
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ostringstream os;
      os << "# case " << doc.at("case_id").get<std::string>() << "\n\n"
         << doc.at("provenance").get<std::string>() << "\n\n";
      render_reclassification_md(os, doc.at("reclassification"));
      os << "\n### lint\n\n";
      render_lint_md(os, doc.at("lint"));
      std::cout << os.str();
    }
    return 0;
  }

  return kExitUsage;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, bool capture_stderr = false) {
  const std::string cmd = std::string(ALPHAGATE_CLI_PATH) + " " + args +
                          (capture_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

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

}  // namespace

TEST_CASE("adjust bonferroni and sidak") {
  RunResult r = run("adjust --alpha-joint 0.05 --k 2 --method bonferroni");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc.at("alpha_constituent") == 0.025);
  CHECK(doc.at("pfer").get<double>() == doctest::Approx(0.05));

  r = run("adjust --alpha-joint 0.05 --k 3 --method sidak");
  CHECK(r.exit_code == 0);
  doc = json::parse(r.output);
  CHECK(doc.at("alpha_constituent").get<double>() == doctest::Approx(0.016952).epsilon(1e-4));
  CHECK(doc.at("fwer").get<double>() == doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("adjust rejects an out-of-domain alpha with exit 2") {
  CHECK(run("adjust --alpha-joint 1.5 --k 3 --method sidak").exit_code == 2);
  CHECK(run("adjust --alpha-joint 0.05 --k 3 --method nope").exit_code == 2);
  CHECK(run("adjust").exit_code == 2);
}

TEST_CASE("adjust csv and markdown formats") {
  RunResult r = run("adjust --alpha-joint 0.05 --k 2 --method bonferroni --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("method,alpha_joint,k,alpha_constituent,fwer,pfer", 0) == 0);
  r = run("adjust --alpha-joint 0.05 --k 2 --method bonferroni --format markdown");
  CHECK(r.output.find("| bonferroni |") != std::string::npos);
}

TEST_CASE("decide --basis all on the Janssen plan") {
  const auto path = write_temp("ag_janssen.json", kJanssenPlan);
  const RunResult r = run("decide --plan " + path.string());
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  const auto& decisions = doc.at("reclassifications").at(0).at("decisions");
  CHECK(decisions.at("joint").at("support") == "full");
  CHECK(decisions.at("individual").at("support") == "full");
  CHECK(decisions.at("hybrid").at("support") == "partial");
}

TEST_CASE("decide exit codes: validation 2, missing p-values 3") {
  const auto empty_family = write_temp("ag_empty_family.json", R"({
    "schema_version": 1,
    "hypotheses": [{"id": "a", "p_value": 0.5}],
    "families": [{"id": "F", "members": [], "mode": "individual",
                  "policy": {"kind": "unadjusted", "alpha": 0.05}}],
    "reported_inferences": []})");
  CHECK(run("decide --plan " + empty_family.string()).exit_code == 2);

  const auto no_p = write_temp("ag_no_p.json", R"({
    "schema_version": 1,
    "hypotheses": [{"id": "a"}],
    "families": [{"id": "F", "members": ["a"], "mode": "individual",
                  "policy": {"kind": "unadjusted", "alpha": 0.05}}],
    "reported_inferences": []})");
  CHECK(run("decide --plan " + no_p.string() + " --basis hybrid").exit_code == 3);

  CHECK(run("decide --plan /nonexistent.json").exit_code == 2);
}

TEST_CASE("decide reports indeterminate outcomes for straddling bands") {
  const auto path = write_temp("ag_band.json", R"({
    "schema_version": 1,
    "hypotheses": [{"id": "a", "p_band": {"lower": 0.01, "upper": 0.04}}],
    "families": [{"id": "F", "members": ["a"], "mode": "union_intersection",
                  "policy": {"kind": "specified", "alpha": 0.025,
                             "derived_from_correction": true}}],
    "reported_inferences": []})");
  const RunResult r = run("decide --plan " + path.string() + " --basis hybrid");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc.at("decisions").at(0).at("per_member_outcome").at("a") == "indeterminate");
}

TEST_CASE("lint strict exit codes") {
  const auto path = write_temp("ag_janssen2.json", kJanssenPlan);
  RunResult r = run("lint --plan " + path.string() + " --strict");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("REDUNDANT_CORRECTION") != std::string::npos);
  CHECK(run("lint --plan " + path.string()).exit_code == 0);

  const auto clean = write_temp("ag_clean.json", R"({
    "schema_version": 1,
    "hypotheses": [{"id": "a", "p_value": 0.5}],
    "families": [{"id": "F", "members": ["a"], "mode": "individual",
                  "policy": {"kind": "unadjusted", "alpha": 0.05}}],
    "reported_inferences": [{"target": "a", "claimed_alpha": 0.05,
                             "claimed_outcome": "fail_to_reject"}]})");
  CHECK(run("lint --plan " + clean.string() + " --strict").exit_code == 0);

  const auto bad = write_temp("ag_bad.json", "{nope");
  CHECK(run("lint --plan " + bad.string()).exit_code == 2);
}

TEST_CASE("lint surfaces Confusion III with its quantity") {
  const auto path = write_temp("ag_confusion3.json", [] {
    json plan = {{"schema_version", 1},
                 {"hypotheses", json::array()},
                 {"families", json::array()},
                 {"reported_inferences", json::array()}};
    json members = json::array();
    for (int i = 0; i < 20; ++i) {
      const std::string id = "H" + std::to_string(i);
      plan["hypotheses"].push_back({{"id", id}, {"p_value", 0.5}});
      members.push_back(id);
    }
    plan["families"].push_back({{"id", "batch"},
                                {"members", members},
                                {"mode", "individual"},
                                {"policy", {{"kind", "bonferroni"}, {"alpha", 0.05}}}});
    return plan.dump();
  }());
  const RunResult r = run("lint --plan " + path.string());
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  REQUIRE(doc.at("findings").size() == 1);
  CHECK(doc.at("findings").at(0).at("code") == "CONFUSION_III");
  CHECK(doc.at("findings").at(0).at("quantities").at("hypothesis_free_fwer").get<double>() ==
        doctest::Approx(0.641514).epsilon(1e-6));
}

TEST_CASE("simulate is deterministic and thread-count independent") {
  const std::string base = "simulate --k 3 --alpha 0.05 --policy unadjusted --reps 20000 --seed 1";
  const RunResult a = run(base + " --threads 1");
  const RunResult b = run(base + " --threads 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json doc = json::parse(a.output);
  CHECK(std::fabs(doc.at("empirical_fwer").at("estimate").get<double>() - 0.1426) < 0.01);
}

TEST_CASE("simulate csv columns") {
  const RunResult r = run("simulate --k 2 --reps 1000 --seed 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("k,rho,policy,alpha_resolved,metric,estimate,se,analytic,replications,seed",
                       0) == 0);
  CHECK(r.output.find("\n2,") != std::string::npos);
  CHECK(r.output.find(",fwer,") != std::string::npos);
  CHECK(r.output.find(",per_test_rate_1,") != std::string::npos);
}

TEST_CASE("simulate seed falls back to ALPHAGATE_SEED") {
  setenv("ALPHAGATE_SEED", "77", 1);
  const RunResult env_seed = run("simulate --k 1 --reps 500");
  unsetenv("ALPHAGATE_SEED");
  const RunResult flag_seed = run("simulate --k 1 --reps 500 --seed 77");
  CHECK(env_seed.output == flag_seed.output);
  CHECK(json::parse(env_seed.output).at("config").at("seed") == 77);
}

TEST_CASE("simulate rejects invalid configs with exit 2") {
  CHECK(run("simulate --k 0 --reps 100").exit_code == 2);
  CHECK(run("simulate --k 2 --rho 1.5 --reps 100").exit_code == 2);
  CHECK(run("simulate --k 2 --delta 1,2,3 --reps 100").exit_code == 2);
}

TEST_CASE("case subcommand") {
  const RunResult r = run("case --id janssen_2023_exp2");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc.at("reclassification").at("decisions").at("hybrid").at("support") == "partial");
  CHECK(doc.at("reclassification").at("decisions").at("joint").at("support") == "full");

  CHECK(run("case --id nope").exit_code == 2);
  const RunResult list = run("case --list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("gender_example") != std::string::npos);
}

TEST_CASE("gender example via CLI: joint full and clean lint") {
  const RunResult r = run("case --id gender_example");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc.at("reclassification").at("decisions").at("joint").at("support") == "full");
  for (const auto& f : doc.at("lint").at("findings"))
    CHECK(f.at("code") != "REDUNDANT_CORRECTION");
}

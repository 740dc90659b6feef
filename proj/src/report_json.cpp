#include "alphagate/report_json.hpp"

#include <set>
#include <stdexcept>

namespace alphagate {

using nlohmann::json;

namespace {

json to_json(const Estimate& e) {
  json j;
  j["estimate"] = e.estimate;
  j["se"] = e.se;
  if (e.analytic)
    j["analytic"] = *e.analytic;
  else
    j["analytic"] = nullptr;
  return j;
}

json policy_json(const AlphaPolicy& p) {
  json j;
  j["kind"] = to_string(p.kind);
  j["alpha"] = p.alpha;
  if (p.derived_from_correction) j["derived_from_correction"] = true;
  return j;
}

}  // namespace

json to_json(const FamilyDecision& d) {
  json j;
  j["family_id"] = d.family_id;
  j["basis"] = to_string(d.basis);
  j["resolved_alpha_constituent"] = d.resolved_alpha_constituent;
  j["per_member_outcome"] = json::object();
  json order = json::array();
  for (const auto& [id, outcome] : d.per_member_outcome) {
    j["per_member_outcome"][id] = to_string(outcome);
    order.push_back(id);
  }
  j["member_order"] = std::move(order);
  if (d.joint_outcome)
    j["joint_outcome"] = to_string(*d.joint_outcome);
  else
    j["joint_outcome"] = nullptr;
  j["support"] = to_string(d.support);
  j["notes"] = d.notes;
  return j;
}

json to_json(const LintFinding& f) {
  json j;
  j["code"] = to_string(f.code);
  j["target"] = f.target;
  j["explanation"] = f.explanation;
  j["quantities"] = f.quantities;
  j["affected_members"] = f.affected_members;
  return j;
}

json to_json(const LintResult& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["findings"] = json::array();
  for (const auto& f : r.findings) j["findings"].push_back(to_json(f));
  j["notes"] = r.notes;
  return j;
}

json to_json(const ReclassificationReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["family_id"] = r.family_id;
  j["decisions"]["joint"] = to_json(r.joint);
  j["decisions"]["individual"] = to_json(r.individual);
  j["decisions"]["hybrid"] = to_json(r.hybrid);
  j["narrative"] = r.narrative;
  return j;
}

json to_json(const SimulationReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"]["k"] = r.config.k;
  j["config"]["effect_sizes"] = r.config.effect_sizes;
  j["config"]["rho"] = r.config.rho;
  j["config"]["policy"] = policy_json(r.config.policy);
  j["config"]["nominal_alpha"] = r.config.nominal_alpha;
  j["config"]["replications"] = r.config.replications;
  j["config"]["seed"] = r.config.seed;
  j["alpha_resolved"] = r.alpha_resolved;
  j["null_members"] = r.null_members;
  j["empirical_fwer"] = to_json(r.fwer);
  j["empirical_pfer"] = to_json(r.pfer);
  j["per_test_rejection_rates"] = json::array();
  for (const auto& e : r.per_test_rate) j["per_test_rejection_rates"].push_back(to_json(e));
  if (r.config.rho > 0.0)
    j["notes"] = json::array({"rho > 0 models equicorrelated dependence; analytic FWER "
                              "baselines apply only under independence"});
  else
    j["notes"] = json::array();
  return j;
}

SimulationConfig parse_simulation_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    static const std::set<std::string> known = {"k",           "effect_sizes", "rho",
                                                "policy",      "nominal_alpha", "replications",
                                                "seed",        "threads"};
    if (!known.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  }
  SimulationConfig config;
  if (!doc.contains("k")) throw std::invalid_argument("missing config key 'k'");
  config.k = doc.at("k").get<long>();
  if (doc.contains("effect_sizes"))
    config.effect_sizes = doc.at("effect_sizes").get<std::vector<double>>();
  if (doc.contains("rho")) config.rho = doc.at("rho").get<double>();
  if (doc.contains("nominal_alpha")) config.nominal_alpha = doc.at("nominal_alpha").get<double>();
  if (doc.contains("replications")) config.replications = doc.at("replications").get<std::int64_t>();
  if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("threads")) config.threads = doc.at("threads").get<int>();
  if (doc.contains("policy")) {
    const auto& p = doc.at("policy");
    if (!p.is_object() || !p.contains("kind") || !p.contains("alpha"))
      throw std::invalid_argument("policy must carry 'kind' and 'alpha'");
    const std::string kind = p.at("kind").get<std::string>();
    if (kind == "unadjusted")
      config.policy.kind = PolicyKind::Unadjusted;
    else if (kind == "sidak")
      config.policy.kind = PolicyKind::Sidak;
    else if (kind == "bonferroni")
      config.policy.kind = PolicyKind::Bonferroni;
    else if (kind == "specified")
      config.policy.kind = PolicyKind::Specified;
    else
      throw std::invalid_argument("unknown policy kind '" + kind + "'");
    config.policy.alpha = p.at("alpha").get<double>();
  }
  return config;
}

}  // namespace alphagate

#include "alphagate/plan_json.hpp"

#include <set>

#include <json.hpp>

namespace alphagate {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw PlanParseError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key))
      throw PlanParseError(where + ": unknown key '" + key + "'");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) throw PlanParseError(where + ": missing key '" + key + "'");
}

double get_number(const json& obj, const std::string& where, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw PlanParseError(where + "." + key + " must be a number");
  return v.get<double>();
}

std::string get_string(const json& obj, const std::string& where, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw PlanParseError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

InferenceMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "individual") return InferenceMode::Individual;
  if (s == "union_intersection") return InferenceMode::UnionIntersection;
  throw PlanParseError(where + ": unknown mode '" + s + "'");
}

PolicyKind parse_policy_kind(const std::string& s, const std::string& where) {
  if (s == "unadjusted") return PolicyKind::Unadjusted;
  if (s == "sidak") return PolicyKind::Sidak;
  if (s == "bonferroni") return PolicyKind::Bonferroni;
  if (s == "specified") return PolicyKind::Specified;
  throw PlanParseError(where + ": unknown policy kind '" + s + "'");
}

ClaimedOutcome parse_claimed_outcome(const std::string& s, const std::string& where) {
  if (s == "reject") return ClaimedOutcome::Reject;
  if (s == "fail_to_reject") return ClaimedOutcome::FailToReject;
  throw PlanParseError(where + ": unknown claimed_outcome '" + s + "'");
}

}  // namespace

TestingPlan parse_plan(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw PlanParseError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(doc, "plan", {"schema_version", "hypotheses", "families", "reported_inferences"},
               {"nominal_alpha"});

  TestingPlan plan;
  if (!doc.at("schema_version").is_number_integer())
    throw PlanParseError("schema_version must be an integer");
  plan.schema_version = doc.at("schema_version").get<int>();
  if (doc.contains("nominal_alpha")) plan.nominal_alpha = get_number(doc, "plan", "nominal_alpha");

  if (!doc.at("hypotheses").is_array()) throw PlanParseError("hypotheses must be an array");
  for (const auto& h : doc.at("hypotheses")) {
    const std::string where = "hypotheses[" + std::to_string(plan.hypotheses.size()) + "]";
    require_keys(h, where, {"id"}, {"label", "p_value", "p_band"});
    Hypothesis hyp;
    hyp.id = get_string(h, where, "id");
    if (h.contains("label")) hyp.label = get_string(h, where, "label");
    if (h.contains("p_value")) hyp.p_value = get_number(h, where, "p_value");
    if (h.contains("p_band")) {
      require_keys(h.at("p_band"), where + ".p_band", {"lower", "upper"});
      hyp.p_band = PBand{get_number(h.at("p_band"), where + ".p_band", "lower"),
                         get_number(h.at("p_band"), where + ".p_band", "upper")};
    }
    plan.hypotheses.push_back(std::move(hyp));
  }

  if (!doc.at("families").is_array()) throw PlanParseError("families must be an array");
  for (const auto& f : doc.at("families")) {
    const std::string where = "families[" + std::to_string(plan.families.size()) + "]";
    require_keys(f, where, {"id", "members", "mode", "policy"});
    Family fam;
    fam.id = get_string(f, where, "id");
    if (!f.at("members").is_array()) throw PlanParseError(where + ".members must be an array");
    for (const auto& m : f.at("members")) {
      if (!m.is_string()) throw PlanParseError(where + ".members entries must be strings");
      fam.members.push_back(m.get<std::string>());
    }
    fam.mode = parse_mode(get_string(f, where, "mode"), where);
    const auto& p = f.at("policy");
    require_keys(p, where + ".policy", {"kind", "alpha"}, {"derived_from_correction"});
    fam.policy.kind = parse_policy_kind(get_string(p, where + ".policy", "kind"), where + ".policy");
    fam.policy.alpha = get_number(p, where + ".policy", "alpha");
    if (p.contains("derived_from_correction")) {
      if (!p.at("derived_from_correction").is_boolean())
        throw PlanParseError(where + ".policy.derived_from_correction must be a boolean");
      fam.policy.derived_from_correction = p.at("derived_from_correction").get<bool>();
    }
    plan.families.push_back(std::move(fam));
  }

  if (!doc.at("reported_inferences").is_array())
    throw PlanParseError("reported_inferences must be an array");
  for (const auto& c : doc.at("reported_inferences")) {
    const std::string where =
        "reported_inferences[" + std::to_string(plan.reported_inferences.size()) + "]";
    require_keys(c, where, {"target", "claimed_alpha", "claimed_outcome"});
    InferenceClaim claim;
    claim.target = get_string(c, where, "target");
    claim.claimed_alpha = get_number(c, where, "claimed_alpha");
    claim.claimed_outcome = parse_claimed_outcome(get_string(c, where, "claimed_outcome"), where);
    plan.reported_inferences.push_back(std::move(claim));
  }

  return plan;
}

std::string emit_plan(const TestingPlan& plan) {
  json doc;
  doc["schema_version"] = plan.schema_version;
  doc["nominal_alpha"] = plan.nominal_alpha;
  doc["hypotheses"] = json::array();
  for (const auto& h : plan.hypotheses) {
    json j;
    j["id"] = h.id;
    if (!h.label.empty()) j["label"] = h.label;
    if (h.p_value) j["p_value"] = *h.p_value;
    if (h.p_band) j["p_band"] = {{"lower", h.p_band->lower}, {"upper", h.p_band->upper}};
    doc["hypotheses"].push_back(std::move(j));
  }
  doc["families"] = json::array();
  for (const auto& f : plan.families) {
    json j;
    j["id"] = f.id;
    j["members"] = f.members;
    j["mode"] = to_string(f.mode);
    j["policy"] = {{"kind", to_string(f.policy.kind)}, {"alpha", f.policy.alpha}};
    if (f.policy.derived_from_correction) j["policy"]["derived_from_correction"] = true;
    doc["families"].push_back(std::move(j));
  }
  doc["reported_inferences"] = json::array();
  for (const auto& c : plan.reported_inferences) {
    doc["reported_inferences"].push_back({{"target", c.target},
                                          {"claimed_alpha", c.claimed_alpha},
                                          {"claimed_outcome", to_string(c.claimed_outcome)}});
  }
  return doc.dump(2);
}

}  // namespace alphagate

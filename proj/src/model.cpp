#include "alphagate/model.hpp"

#include <set>

namespace alphagate {

namespace {

bool valid_identifier(const std::string& id) {
  return !id.empty() && id.size() <= 64;
}

bool valid_alpha(double a) { return a > 0.0 && a < 1.0; }

}  // namespace

std::string to_string(const ValidationError& e) { return e.field + ": " + e.rule; }

const Hypothesis* find_hypothesis(const TestingPlan& plan, const std::string& id) {
  for (const auto& h : plan.hypotheses)
    if (h.id == id) return &h;
  return nullptr;
}

const Family* find_family(const TestingPlan& plan, const std::string& id) {
  for (const auto& f : plan.families)
    if (f.id == id) return &f;
  return nullptr;
}

std::vector<ValidationError> validate_plan(const TestingPlan& plan) {
  std::vector<ValidationError> errors;
  auto err = [&](std::string field, std::string rule) {
    errors.push_back({std::move(field), std::move(rule)});
  };

  if (plan.schema_version != 1)
    err("schema_version", "unsupported schema_version " + std::to_string(plan.schema_version));
  if (!valid_alpha(plan.nominal_alpha))
    err("nominal_alpha", "nominal_alpha must be in (0,1)");

  std::set<std::string> hyp_ids;
  for (const auto& h : plan.hypotheses) {
    const std::string where = "hypotheses[" + h.id + "]";
    if (!valid_identifier(h.id))
      err(where, "id must be non-empty and at most 64 characters");
    else if (!hyp_ids.insert(h.id).second)
      err(where, "duplicate hypothesis id '" + h.id + "'");
    if (h.p_value && h.p_band)
      err(where, "p_value and p_band are mutually exclusive");
    if (h.p_value && !(*h.p_value > 0.0 && *h.p_value <= 1.0))
      err(where + ".p_value", "p_value must be in (0,1]");
    if (h.p_band) {
      const auto& b = *h.p_band;
      if (!(b.lower >= 0.0 && b.lower < b.upper && b.upper <= 1.0))
        err(where + ".p_band", "p_band requires 0 <= lower < upper <= 1");
    }
  }

  std::set<std::string> fam_ids;
  std::map<std::string, std::string> member_owner;
  for (const auto& f : plan.families) {
    const std::string where = "families[" + f.id + "]";
    if (!valid_identifier(f.id))
      err(where, "id must be non-empty and at most 64 characters");
    else if (hyp_ids.count(f.id))
      err(where, "family id '" + f.id + "' collides with a hypothesis id");
    else if (!fam_ids.insert(f.id).second)
      err(where, "duplicate family id '" + f.id + "'");
    if (f.members.empty()) err(where + ".members", "family must have at least one member");
    std::set<std::string> seen;
    for (const auto& m : f.members) {
      if (!hyp_ids.count(m)) {
        err(where + ".members", "unresolved member " + m);
        continue;
      }
      if (!seen.insert(m).second) {
        err(where + ".members", "duplicate member " + m);
        continue;
      }
      auto [it, fresh] = member_owner.emplace(m, f.id);
      if (!fresh)
        err(where + ".members",
            "hypothesis " + m + " already belongs to family " + it->second);
    }
    if (!valid_alpha(f.policy.alpha))
      err(where + ".policy.alpha", "alpha must be in (0,1)");
    if (f.policy.derived_from_correction && f.policy.kind != PolicyKind::Specified)
      err(where + ".policy", "derived_from_correction applies only to specified policies");
  }

  for (std::size_t i = 0; i < plan.reported_inferences.size(); ++i) {
    const auto& c = plan.reported_inferences[i];
    const std::string where = "reported_inferences[" + std::to_string(i) + "]";
    if (!hyp_ids.count(c.target) && !fam_ids.count(c.target))
      err(where + ".target", "unresolved target " + c.target);
    if (!valid_alpha(c.claimed_alpha))
      err(where + ".claimed_alpha", "claimed_alpha must be in (0,1)");
  }

  return errors;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Reject: return "reject";
    case Outcome::FailToReject: return "fail_to_reject";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(Support s) {
  switch (s) {
    case Support::Full: return "full";
    case Support::Partial: return "partial";
    case Support::None: return "none";
    case Support::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(InferenceMode m) {
  return m == InferenceMode::Individual ? "individual" : "union_intersection";
}

const char* to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::Unadjusted: return "unadjusted";
    case PolicyKind::Sidak: return "sidak";
    case PolicyKind::Bonferroni: return "bonferroni";
    case PolicyKind::Specified: return "specified";
  }
  return "?";
}

const char* to_string(DecisionBasis b) {
  switch (b) {
    case DecisionBasis::JointUnionIntersection: return "joint";
    case DecisionBasis::IndividualAtNominal: return "individual";
    case DecisionBasis::HybridAsReported: return "hybrid";
  }
  return "?";
}

const char* to_string(ClaimedOutcome c) {
  return c == ClaimedOutcome::Reject ? "reject" : "fail_to_reject";
}

}  // namespace alphagate

#include "alphagate/decision.hpp"

#include <algorithm>
#include <stdexcept>

#include "alphagate/error_rates.hpp"

namespace alphagate {

namespace {

void check_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p-value must be in (0,1]");
}

void check_alpha(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("alpha must be in (0,1)");
}

Outcome member_outcome(const Hypothesis& h, double alpha) {
  if (h.p_value) return decide_individual(*h.p_value, alpha);
  if (h.p_band) return decide_band(*h.p_band, alpha);
  throw MissingPValueError(h.id);
}

const Hypothesis& member(const TestingPlan& plan, const std::string& id) {
  const Hypothesis* h = find_hypothesis(plan, id);
  if (!h) throw std::invalid_argument("unresolved hypothesis id " + id);
  return *h;
}

}  // namespace

Outcome decide_union_intersection(std::span<const double> p_values, double alpha_constituent) {
  if (p_values.empty()) throw std::domain_error("empty p-value list");
  check_alpha(alpha_constituent);
  for (double p : p_values) check_p(p);
  const double p_min = *std::min_element(p_values.begin(), p_values.end());
  return p_min < alpha_constituent ? Outcome::Reject : Outcome::FailToReject;
}

Outcome decide_individual(double p_value, double alpha_individual) {
  check_p(p_value);
  check_alpha(alpha_individual);
  return p_value < alpha_individual ? Outcome::Reject : Outcome::FailToReject;
}

std::vector<Outcome> decide_hybrid(std::span<const double> p_values, double alpha_constituent) {
  if (p_values.empty()) throw std::domain_error("empty p-value list");
  check_alpha(alpha_constituent);
  std::vector<Outcome> out;
  out.reserve(p_values.size());
  for (double p : p_values) out.push_back(decide_individual(p, alpha_constituent));
  return out;
}

Outcome decide_band(const PBand& band, double alpha) {
  check_alpha(alpha);
  if (!(band.lower >= 0.0 && band.lower < band.upper && band.upper <= 1.0))
    throw std::domain_error("p_band requires 0 <= lower < upper <= 1");
  if (band.upper <= alpha) return Outcome::Reject;        // whole band below alpha
  if (band.lower >= alpha) return Outcome::FailToReject;  // whole band at or above alpha
  return Outcome::Indeterminate;
}

Support summarize_support(std::span<const Outcome> per_member_outcomes) {
  if (per_member_outcomes.empty()) throw std::domain_error("empty outcome list");
  std::size_t rejects = 0, fails = 0, indet = 0;
  for (Outcome o : per_member_outcomes) {
    switch (o) {
      case Outcome::Reject: ++rejects; break;
      case Outcome::FailToReject: ++fails; break;
      case Outcome::Indeterminate: ++indet; break;
    }
  }
  if (indet == 0) {
    if (fails == 0) return Support::Full;
    if (rejects == 0) return Support::None;
    return Support::Partial;
  }
  // With a mixed reject/fail pair already present the label is Partial under
  // every resolution of the indeterminate members; otherwise it depends.
  if (rejects > 0 && fails > 0) return Support::Partial;
  return Support::Indeterminate;
}

FamilyDecision evaluate_family(const Family& family, const TestingPlan& plan, DecisionBasis basis) {
  FamilyDecision d;
  d.family_id = family.id;
  d.basis = basis;
  const long k = static_cast<long>(family.members.size());

  if (basis == DecisionBasis::JointUnionIntersection) {
    d.resolved_alpha_constituent = resolve_policy(family.policy, k);
    std::size_t rejects = 0, fails = 0;
    for (const auto& id : family.members) {
      switch (member_outcome(member(plan, id), d.resolved_alpha_constituent)) {
        case Outcome::Reject: ++rejects; break;
        case Outcome::FailToReject: ++fails; break;
        case Outcome::Indeterminate: break;
      }
    }
    if (rejects > 0) {
      d.joint_outcome = Outcome::Reject;
      d.support = Support::Full;
    } else if (fails == family.members.size()) {
      d.joint_outcome = Outcome::FailToReject;
      d.support = Support::None;
      d.notes.push_back(
          "joint fail-to-reject is reported as support 'none'; the label for an "
          "unrejected intersection null is a reporting convention, not a finding of absence");
    } else {
      d.joint_outcome = Outcome::Indeterminate;
      d.support = Support::Indeterminate;
    }
    return d;
  }

  const double alpha = basis == DecisionBasis::IndividualAtNominal
                           ? plan.nominal_alpha
                           : resolve_policy(family.policy, k);
  d.resolved_alpha_constituent = alpha;
  std::vector<Outcome> outcomes;
  outcomes.reserve(family.members.size());
  for (const auto& id : family.members) {
    outcomes.push_back(member_outcome(member(plan, id), alpha));
    d.per_member_outcome.emplace_back(id, outcomes.back());
  }
  d.support = summarize_support(outcomes);
  if (basis == DecisionBasis::HybridAsReported)
    d.notes.push_back(
        "hybrid basis is methodologically invalid: per-member inferences at an "
        "adjusted threshold mix individual inferences with a family-level correction "
        "(REDUNDANT_CORRECTION)");
  return d;
}

}  // namespace alphagate

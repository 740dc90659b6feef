#include "alphagate/lint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "alphagate/decision.hpp"
#include "alphagate/error_rates.hpp"

namespace alphagate {

namespace {

bool is_adjusting(const AlphaPolicy& policy, double nominal_alpha) {
  switch (policy.kind) {
    case PolicyKind::Sidak:
    case PolicyKind::Bonferroni:
      return true;
    case PolicyKind::Specified:
      return policy.derived_from_correction && policy.alpha < nominal_alpha;
    case PolicyKind::Unadjusted:
      return false;
  }
  return false;
}

// Members whose decision flips from reject (at nominal) to fail-to-reject
// (at the adjusted threshold): point p in [alpha_c, nominal), or a band
// lying entirely inside that interval.
std::vector<std::string> lost_decisions(const Family& family, const TestingPlan& plan,
                                        double alpha_c, double nominal) {
  std::vector<std::string> lost;
  for (const auto& id : family.members) {
    const Hypothesis* h = find_hypothesis(plan, id);
    if (!h) continue;
    if (h->p_value) {
      if (*h->p_value >= alpha_c && *h->p_value < nominal) lost.push_back(id);
    } else if (h->p_band) {
      if (h->p_band->lower >= alpha_c && h->p_band->upper <= nominal) lost.push_back(id);
    }
  }
  return lost;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(LintCode c) {
  switch (c) {
    case LintCode::RedundantCorrection: return "REDUNDANT_CORRECTION";
    case LintCode::MissingAdjustment: return "MISSING_ADJUSTMENT";
    case LintCode::ConfusionI: return "CONFUSION_I";
    case LintCode::ConfusionII: return "CONFUSION_II";
    case LintCode::ConfusionIII: return "CONFUSION_III";
    case LintCode::HypothesisFreeFwer: return "HYPOTHESIS_FREE_FWER";
  }
  return "?";
}

LintResult lint_plan(const TestingPlan& plan) {
  LintResult result;

  std::vector<const Family*> families;
  for (const auto& f : plan.families) families.push_back(&f);
  std::sort(families.begin(), families.end(),
            [](const Family* a, const Family* b) { return a->id < b->id; });

  for (const Family* fp : families) {
    const Family& f = *fp;
    const long k = static_cast<long>(f.members.size());
    if (k < 1) continue;  // structurally invalid; validation reports it
    const bool adjusting = is_adjusting(f.policy, plan.nominal_alpha);

    bool joint_claim = false;
    std::size_t individual_claims = 0;
    for (const auto& c : plan.reported_inferences) {
      if (c.target == f.id) joint_claim = true;
      if (std::find(f.members.begin(), f.members.end(), c.target) != f.members.end())
        ++individual_claims;
    }

    double alpha_c = 0.0;
    try {
      alpha_c = resolve_policy(f.policy, k);
    } catch (const std::domain_error&) {
      continue;
    }

    if (f.mode == InferenceMode::Individual && k >= 2 && adjusting) {
      LintFinding finding;
      finding.code = LintCode::ConfusionIII;
      finding.target = f.id;
      finding.quantities["k"] = static_cast<double>(k);
      finding.quantities["resolved_alpha"] = alpha_c;
      finding.quantities["hypothesis_free_fwer"] = fwer_independent(plan.nominal_alpha, k);
      finding.explanation =
          "family " + f.id + " groups " + std::to_string(k) +
          " separate individual inferences but applies a multiplicity correction; the "
          "familywise rate over a collection of separate inferences (" +
          fmt(finding.quantities["hypothesis_free_fwer"]) +
          ") corresponds to no hypothesis decision and each per-inference Type I rate "
          "stays at its individual alpha";
      result.findings.push_back(std::move(finding));
    }

    if (adjusting && !joint_claim && individual_claims >= 1) {
      LintFinding finding;
      finding.code = LintCode::RedundantCorrection;
      finding.target = f.id;
      finding.quantities["resolved_alpha"] = alpha_c;
      finding.quantities["nominal_alpha"] = plan.nominal_alpha;
      finding.affected_members = lost_decisions(f, plan, alpha_c, plan.nominal_alpha);
      finding.quantities["power_cost"] = static_cast<double>(finding.affected_members.size());
      finding.explanation =
          "family " + f.id + " adjusts alpha to " + fmt(alpha_c) +
          " for a joint inference, but only individual inferences are reported; the "
          "correction is redundant and forfeits " +
          std::to_string(finding.affected_members.size()) +
          " rejection(s) available at the unadjusted alpha of " + fmt(plan.nominal_alpha);
      result.findings.push_back(std::move(finding));
    }

    if (f.policy.kind == PolicyKind::Unadjusted && k >= 2 && joint_claim) {
      const double inflated = fwer_independent(alpha_c, k);
      if (f.mode == InferenceMode::UnionIntersection) {
        LintFinding finding;
        finding.code = LintCode::MissingAdjustment;
        finding.target = f.id;
        finding.quantities["resolved_alpha"] = alpha_c;
        finding.quantities["k"] = static_cast<double>(k);
        finding.quantities["fwer"] = inflated;
        finding.explanation =
            "family " + f.id + " reports a joint inference over " + std::to_string(k) +
            " tests at an unadjusted alpha of " + fmt(alpha_c) +
            "; the familywise error rate for that inference is " + fmt(inflated);
        result.findings.push_back(std::move(finding));
      } else {
        LintFinding finding;
        finding.code = LintCode::HypothesisFreeFwer;
        finding.target = f.id;
        finding.quantities["k"] = static_cast<double>(k);
        finding.quantities["hypothesis_free_fwer"] = inflated;
        finding.explanation =
            "family " + f.id + " carries a family-level claim over " + std::to_string(k) +
            " separate individual inferences; the associated familywise rate (" +
            fmt(inflated) + ") is hypothesis-free and does not describe any Type I error rate";
        result.findings.push_back(std::move(finding));
      }
    }

    if (adjusting && joint_claim && individual_claims >= 1)
      result.notes.push_back(
          "family " + f.id +
          ": joint claim alongside individual claims at the adjusted alpha; the individual "
          "claims do not require the adjustment, but the joint claim does, so no "
          "REDUNDANT_CORRECTION is emitted (interpretation)");
  }

  return result;
}

std::optional<LintFinding> classify_confusion(const DescribedAnalysis& a) {
  if (a.n_inferences < 1 || a.tests_per_inference < 1 || a.k_used_for_correction < 1)
    throw std::domain_error("counts must be >= 1");
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw std::domain_error("alpha must be in (0,1)");

  if (a.tests_per_inference != 1) return std::nullopt;

  if (a.k_used_for_correction == a.n_inferences && a.n_inferences > 1) {
    LintFinding finding;
    finding.code = LintCode::ConfusionIII;
    finding.quantities["n_inferences"] = static_cast<double>(a.n_inferences);
    finding.quantities["hypothesis_free_fwer"] = fwer_independent(a.alpha, a.n_inferences);
    finding.explanation =
        "k was set to the number of separate inferences (" + std::to_string(a.n_inferences) +
        ") rather than the number of tests per inference (1); the familywise rate " +
        fmt(finding.quantities["hypothesis_free_fwer"]) +
        " is hypothesis-free and irrelevant to each per-inference Type I rate of " +
        fmt(a.alpha);
    return finding;
  }
  if (a.claim == InflationClaim::IndividualRate) {
    LintFinding finding;
    finding.code = LintCode::ConfusionI;
    finding.quantities["per_inference_rate"] = a.alpha;
    finding.explanation =
        "each inference uses a single test, so its individual Type I rate is exactly its "
        "alpha (" + fmt(a.alpha) + "); multiple testing does not inflate it";
    return finding;
  }
  if (a.claim == InflationClaim::FamilyRate) {
    LintFinding finding;
    finding.code = LintCode::ConfusionII;
    finding.quantities["per_inference_rate"] = a.alpha;
    finding.explanation =
        "with one test per inference the per-inference family of size k=1 has familywise "
        "and per-family rates both equal to alpha (" + fmt(a.alpha) + ")";
    return finding;
  }
  return std::nullopt;
}

ReclassificationReport reclassify(const Family& family, const TestingPlan& plan) {
  ReclassificationReport report;
  report.family_id = family.id;
  report.joint = evaluate_family(family, plan, DecisionBasis::JointUnionIntersection);
  report.individual = evaluate_family(family, plan, DecisionBasis::IndividualAtNominal);
  report.hybrid = evaluate_family(family, plan, DecisionBasis::HybridAsReported);

  std::ostringstream os;
  os << "family " << family.id << ": joint " << to_string(report.joint.support)
     << ", individual " << to_string(report.individual.support) << ", hybrid "
     << to_string(report.hybrid.support) << ".";
  if (report.hybrid.support != report.individual.support) {
    os << " The hybrid reading disagrees with individual inferences at the nominal "
          "alpha of "
       << fmt(plan.nominal_alpha) << ".";
  } else {
    os << " All bases agree on the support label.";
  }
  report.narrative = os.str();
  return report;
}

}  // namespace alphagate

#ifndef ALPHAGATE_MODEL_HPP
#define ALPHAGATE_MODEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphagate {

// Outcome of comparing a p-value (or band) against a threshold.
// Indeterminate arises only when a p-band straddles the threshold.
enum class Outcome { Reject, FailToReject, Indeterminate };

enum class InferenceMode { Individual, UnionIntersection };

enum class Support { Full, Partial, None, Indeterminate };

enum class ClaimedOutcome { Reject, FailToReject };

// How the per-test threshold for a family is derived.
enum class PolicyKind { Unadjusted, Sidak, Bonferroni, Specified };

struct AlphaPolicy {
  PolicyKind kind = PolicyKind::Unadjusted;
  // Unadjusted/Specified: the per-test alpha itself.
  // Sidak/Bonferroni: the joint alpha to be controlled.
  double alpha = 0.05;
  // Only meaningful for Specified: plan declares the stringent alpha was
  // obtained by dividing/adjusting a conventional level rather than being
  // specified up front.
  bool derived_from_correction = false;
};

// Half-open interval [lower, upper) holding an imprecisely reported p-value,
// e.g. "p < .001" or "0.025 < p < 0.050".
struct PBand {
  double lower = 0.0;
  double upper = 1.0;
};

struct Hypothesis {
  std::string id;
  std::string label;
  std::optional<double> p_value;
  std::optional<PBand> p_band;
};

struct Family {
  std::string id;
  std::vector<std::string> members;
  InferenceMode mode = InferenceMode::Individual;
  AlphaPolicy policy;
};

// A claim the plan's authors reported: either about one hypothesis
// (target = hypothesis id) or about a whole family (target = family id).
struct InferenceClaim {
  std::string target;
  double claimed_alpha = 0.05;
  ClaimedOutcome claimed_outcome = ClaimedOutcome::Reject;
};

struct TestingPlan {
  int schema_version = 1;
  std::vector<Hypothesis> hypotheses;
  std::vector<Family> families;
  std::vector<InferenceClaim> reported_inferences;
  // Threshold for individual inferences when no correction is in play.
  double nominal_alpha = 0.05;
};

struct ValidationError {
  std::string field;
  std::string rule;
};

std::string to_string(const ValidationError& e);

// Checks every structural invariant: id shape and uniqueness, p-value and
// band domains, referential integrity, membership exclusivity, alpha domains.
// Empty result means the plan is safe for every downstream operation that
// only depends on plan structure.
std::vector<ValidationError> validate_plan(const TestingPlan& plan);

const Hypothesis* find_hypothesis(const TestingPlan& plan, const std::string& id);
const Family* find_family(const TestingPlan& plan, const std::string& id);

// Which decision procedure to apply to a family's p-values.
enum class DecisionBasis { JointUnionIntersection, IndividualAtNominal, HybridAsReported };

struct FamilyDecision {
  std::string family_id;
  DecisionBasis basis = DecisionBasis::JointUnionIntersection;
  double resolved_alpha_constituent = 0.0;
  // Ordered as the family's member list. Empty for the joint basis, which
  // by construction names no individual member.
  std::vector<std::pair<std::string, Outcome>> per_member_outcome;
  std::optional<Outcome> joint_outcome;  // present iff mode = UnionIntersection basis applies
  Support support = Support::Indeterminate;
  std::vector<std::string> notes;
};

// Raised when a decision needs a p-value a hypothesis does not carry.
class MissingPValueError : public std::runtime_error {
 public:
  explicit MissingPValueError(const std::string& hypothesis_id)
      : std::runtime_error("hypothesis '" + hypothesis_id + "' carries no p_value or p_band"),
        hypothesis_id_(hypothesis_id) {}
  const std::string& hypothesis_id() const { return hypothesis_id_; }

 private:
  std::string hypothesis_id_;
};

const char* to_string(Outcome o);
const char* to_string(Support s);
const char* to_string(InferenceMode m);
const char* to_string(PolicyKind k);
const char* to_string(DecisionBasis b);
const char* to_string(ClaimedOutcome c);

}  // namespace alphagate

#endif

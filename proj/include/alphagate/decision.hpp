#ifndef ALPHAGATE_DECISION_HPP
#define ALPHAGATE_DECISION_HPP

#include <span>
#include <vector>

#include "alphagate/model.hpp"

namespace alphagate {

// Union-intersection test: reject the intersection null iff at least one
// p < alpha_constituent. Says nothing about which member drove the rejection.
Outcome decide_union_intersection(std::span<const double> p_values, double alpha_constituent);

// One test, one inference; strict comparison, no adjustment.
Outcome decide_individual(double p_value, double alpha_individual);

// The fallacious hybrid: per-member decisions at the family's adjusted
// threshold. Provided so published analyses can be reproduced for audit.
std::vector<Outcome> decide_hybrid(std::span<const double> p_values, double alpha_constituent);

// p < alpha for a banded p-value; Indeterminate when alpha falls inside
// the band [lower, upper).
Outcome decide_band(const PBand& band, double alpha);

Support summarize_support(std::span<const Outcome> per_member_outcomes);

FamilyDecision evaluate_family(const Family& family, const TestingPlan& plan, DecisionBasis basis);

}  // namespace alphagate

#endif

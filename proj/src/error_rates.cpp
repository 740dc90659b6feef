#include "alphagate/error_rates.hpp"

#include <cmath>
#include <stdexcept>

namespace alphagate {

namespace {

void check_domain(double alpha, long k) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must be in (0,1)");
  if (k < 1) throw std::domain_error("k must be >= 1");
}

}  // namespace

double fwer_independent(double alpha_constituent, long k) {
  check_domain(alpha_constituent, k);
  // 1 - (1-a)^k without cancellation for small a, large k.
  return -std::expm1(static_cast<double>(k) * std::log1p(-alpha_constituent));
}

double pfer(double alpha_constituent, long k) {
  check_domain(alpha_constituent, k);
  return alpha_constituent * static_cast<double>(k);
}

double sidak_adjust(double alpha_joint, long k) {
  check_domain(alpha_joint, k);
  // 1 - (1 - a_joint)^(1/k)
  return -std::expm1(std::log1p(-alpha_joint) / static_cast<double>(k));
}

double bonferroni_adjust(double alpha_joint, long k) {
  check_domain(alpha_joint, k);
  return alpha_joint / static_cast<double>(k);
}

double resolve_policy(const AlphaPolicy& policy, long k) {
  switch (policy.kind) {
    case PolicyKind::Unadjusted:
    case PolicyKind::Specified:
      check_domain(policy.alpha, k);
      return policy.alpha;
    case PolicyKind::Sidak:
      return sidak_adjust(policy.alpha, k);
    case PolicyKind::Bonferroni:
      return bonferroni_adjust(policy.alpha, k);
  }
  throw std::logic_error("unknown policy kind");
}

RatePair rates_for_family(const AlphaPolicy& policy, long k) {
  const double alpha_c = resolve_policy(policy, k);
  return {fwer_independent(alpha_c, k), pfer(alpha_c, k)};
}

}  // namespace alphagate

#ifndef ALPHAGATE_ERROR_RATES_HPP
#define ALPHAGATE_ERROR_RATES_HPP

#include "alphagate/model.hpp"

namespace alphagate {

struct RatePair {
  double fwer = 0.0;  // P(at least one false positive in the family)
  double pfer = 0.0;  // expected count of false positives in the family
};

// 1 - (1 - alpha)^k under independence. Throws std::domain_error outside
// alpha in (0,1) or k < 1.
double fwer_independent(double alpha_constituent, long k);

// alpha * k, the expected number of Type I errors at equal per-test alphas.
double pfer(double alpha_constituent, long k);

// Dunn-Sidak: per-test alpha whose independent FWER equals alpha_joint.
double sidak_adjust(double alpha_joint, long k);

// Bonferroni: alpha_joint / k; controls PFER exactly, FWER conservatively.
double bonferroni_adjust(double alpha_joint, long k);

// Per-test threshold implied by a policy for a family of k tests.
double resolve_policy(const AlphaPolicy& policy, long k);

RatePair rates_for_family(const AlphaPolicy& policy, long k);

}  // namespace alphagate

#endif

#ifndef ALPHAGATE_NORMAL_HPP
#define ALPHAGATE_NORMAL_HPP

namespace alphagate {

// Standard normal CDF, accurate in both tails.
double normal_cdf(double x);

// Inverse standard normal CDF (Wichura's AS 241 rational approximation with
// one Halley refinement step). Throws std::domain_error at p <= 0 or p >= 1.
double normal_quantile(double p);

// Two-sided p-value for a standard normal test statistic, clamped to (0,1].
double p_value_two_sided(double z);

// Rejection probability of the two-sided z-test at level alpha when the true
// standardized shift is delta.
double analytic_power(double delta, double alpha);

}  // namespace alphagate

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "alphagate/normal.hpp"

using namespace alphagate;

namespace {

// Independent oracle for the normal CDF: Taylor series around 0 for moderate
// |x|, continued fraction for the Mills ratio in the far tail. Neither path
// touches erfc, which backs the implementation.
double phi_density(double x) { return std::exp(-0.5 * x * x) / 2.5066282746310005024; }

double cdf_series(double x) {
  // Phi(x) = 1/2 + phi(x) * sum_{n>=0} x^(2n+1) / (1*3*...*(2n+1))
  double term = x;
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= x * x / (2.0 * n + 1.0);
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  return 0.5 + phi_density(x) * sum;
}

double cdf_tail_cf(double x) {
  // For x < 0: Phi(x) = phi(x) * 1/(|x| + 1/(|x| + 2/(|x| + 3/(...))))
  const double a = -x;
  double cf = 0.0;
  for (int n = 120; n >= 1; --n) cf = n / (a + cf);
  return phi_density(x) / (a + cf);
}

double cdf_oracle(double x) {
  if (x < -5.0) return cdf_tail_cf(x);
  if (x > 5.0) return 1.0 - cdf_tail_cf(-x);
  return cdf_series(x);
}

double quantile_by_bisection(double p) {
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Simpson quadrature of the density over [a, b].
double integrate_density(double a, double b) {
  const int n = 4000;  // even
  const double h = (b - a) / n;
  double sum = phi_density(a) + phi_density(b);
  for (int i = 1; i < n; ++i) sum += phi_density(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

double power_by_quadrature(double delta, double alpha) {
  // reject iff |delta + Z| > z_crit, Z ~ N(0,1)
  const double z_crit = quantile_by_bisection(1.0 - alpha / 2.0);
  return 1.0 - integrate_density(-z_crit - delta, z_crit - delta);
}

}  // namespace

TEST_CASE("normal_cdf against the series/continued-fraction oracle") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959964) == doctest::Approx(0.975000).epsilon(1e-6));
  CHECK(normal_cdf(-8.0) == doctest::Approx(6.22e-16).epsilon(1e-2));
  for (double x = -8.0; x <= 8.0; x += 0.173) {
    CHECK(normal_cdf(x) == doctest::Approx(cdf_oracle(x)).epsilon(1e-12));
  }
  // absolute error contract
  for (double x : {-8.0, -5.5, -3.0, -1.0, -0.1, 0.3, 2.0, 4.5, 7.0})
    CHECK(std::fabs(normal_cdf(x) - cdf_oracle(x)) < 1e-12);
}

TEST_CASE("normal_cdf monotonicity and symmetry") {
  double prev = 0.0;
  for (double x = -10.0; x <= 10.0; x += 0.01) {
    const double v = normal_cdf(x);
    CHECK(v >= prev);
    prev = v;
    CHECK(normal_cdf(x) + normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("normal_quantile against the bisection oracle") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-6));
  CHECK(normal_quantile(0.9875) == doctest::Approx(2.241403).epsilon(1e-6));
  // the bisection oracle loses resolution where the CDF flattens, so the
  // upper-tail probe stops at 0.999999 (x ~ 4.75)
  for (double p : {1e-10, 1e-6, 0.001, 0.025, 0.3, 0.5, 0.7, 0.975, 0.999, 0.999999})
    CHECK(normal_quantile(p) == doctest::Approx(quantile_by_bisection(p)).epsilon(1e-9));
}

TEST_CASE("normal_quantile round trip within 1e-9") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(1e-8, 1.0 - 1e-8);
  for (int i = 0; i < 5000; ++i) {
    const double p = unit(rng);
    CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("normal_quantile domain") {
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(-0.5), std::domain_error);
}

TEST_CASE("p_value_two_sided") {
  CHECK(p_value_two_sided(0.0) == 1.0);
  CHECK(p_value_two_sided(1.959964) == doctest::Approx(0.050).epsilon(1e-5));
  CHECK(p_value_two_sided(2.241403) == doctest::Approx(0.025).epsilon(1e-5));
  CHECK(p_value_two_sided(-2.241403) == doctest::Approx(0.025).epsilon(1e-5));
  CHECK(p_value_two_sided(100.0) > 0.0);  // clamped away from exact zero
  CHECK(p_value_two_sided(1e-300) <= 1.0);
}

TEST_CASE("analytic_power") {
  CHECK(analytic_power(0.0, 0.05) == doctest::Approx(0.050).epsilon(1e-9));
  CHECK(analytic_power(2.80158, 0.05) == doctest::Approx(0.800).epsilon(1e-3));
  CHECK(analytic_power(2.80158, 0.025) == doctest::Approx(0.7123).epsilon(1e-3));
  CHECK_THROWS_AS(analytic_power(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(analytic_power(1.0, 1.0), std::domain_error);
}

TEST_CASE("analytic_power against the quadrature oracle") {
  for (double delta : {0.0, 0.5, 1.0, 2.0, 2.80158, -1.5})
    for (double alpha : {0.01, 0.025, 0.05, 0.2})
      CHECK(analytic_power(delta, alpha) ==
            doctest::Approx(power_by_quadrature(delta, alpha)).epsilon(1e-7));
}

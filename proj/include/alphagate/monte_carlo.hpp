#ifndef ALPHAGATE_MONTE_CARLO_HPP
#define ALPHAGATE_MONTE_CARLO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "alphagate/model.hpp"

namespace alphagate {

// Equicorrelated single-factor z-test model:
//   Z_i = delta_i + sqrt(rho) * S + sqrt(1 - rho) * E_i
// with S, E_i iid standard normal. rho = 0 gives independent tests.
struct SimulationConfig {
  long k = 1;
  std::vector<double> effect_sizes;  // length k; all zero = global null
  double rho = 0.0;                  // in [0,1)
  AlphaPolicy policy;
  double nominal_alpha = 0.05;
  std::int64_t replications = 10000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency; never affects results
};

// Throws std::domain_error describing the first violated constraint.
void check_config(const SimulationConfig& config);

// p-values for one replication. Keyed by (seed, replication_index) only, so
// the same pair yields the same vector regardless of execution order or
// thread count.
std::vector<double> draw_family(const SimulationConfig& config, std::uint64_t replication_index);

struct Estimate {
  double estimate = 0.0;
  double se = 0.0;
  std::optional<double> analytic;  // present when an exact baseline exists
};

struct SimulationReport {
  SimulationConfig config;
  double alpha_resolved = 0.0;
  long null_members = 0;  // members with effect size zero
  Estimate fwer;          // over null members only
  Estimate pfer;          // over null members only
  std::vector<Estimate> per_test_rate;  // rejection rate per member (Type I rate
                                        // when delta_i = 0, power otherwise)
};

// Seeded Monte Carlo estimate of FWER, PFER, per-test rejection rates and
// power under the configured policy. Counts are exact integers reduced over
// replications, so the report is identical for any thread count.
SimulationReport simulate_rates(const SimulationConfig& config);

}  // namespace alphagate

#endif

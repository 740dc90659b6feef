#include "alphagate/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "alphagate/error_rates.hpp"
#include "alphagate/normal.hpp"

namespace alphagate {

namespace {

std::uint64_t fmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// splitmix64 stream whose start state is a scrambled function of
// (seed, replication_index); gives each replication its own substream.
struct SubStream {
  std::uint64_t state;
  SubStream(std::uint64_t seed, std::uint64_t index)
      : state(fmix64(seed ^ fmix64(index + 0x632BE59BD9B4E019ULL))) {}
  std::uint64_t next_bits() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    return fmix64(z);
  }
  double next_uniform() {
    // 53-bit uniform, offset into the open interval (0,1)
    return static_cast<double>(next_bits() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
  double next_normal() { return normal_quantile(next_uniform()); }
};

struct Counts {
  std::int64_t fwer_hits = 0;
  std::int64_t null_rejections = 0;
  std::int64_t null_rejections_sq = 0;  // sum of squared per-replication counts
  std::vector<std::int64_t> per_member;
};

void accumulate(const SimulationConfig& config, double alpha_resolved, std::int64_t begin,
                std::int64_t end, Counts& counts) {
  const std::size_t k = static_cast<std::size_t>(config.k);
  const double sqrt_rho = std::sqrt(config.rho);
  const double sqrt_comp = std::sqrt(1.0 - config.rho);
  for (std::int64_t rep = begin; rep < end; ++rep) {
    SubStream stream(config.seed, static_cast<std::uint64_t>(rep));
    const double shared = stream.next_normal();
    std::int64_t null_rej = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double z = config.effect_sizes[i] + sqrt_rho * shared + sqrt_comp * stream.next_normal();
      if (p_value_two_sided(z) < alpha_resolved) {
        ++counts.per_member[i];
        if (config.effect_sizes[i] == 0.0) ++null_rej;
      }
    }
    counts.fwer_hits += null_rej > 0 ? 1 : 0;
    counts.null_rejections += null_rej;
    counts.null_rejections_sq += null_rej * null_rej;
  }
}

Estimate proportion_estimate(std::int64_t hits, std::int64_t n) {
  Estimate e;
  e.estimate = static_cast<double>(hits) / static_cast<double>(n);
  e.se = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(n));
  return e;
}

}  // namespace

void check_config(const SimulationConfig& config) {
  if (config.k < 1) throw std::domain_error("k must be >= 1");
  if (!config.effect_sizes.empty() &&
      config.effect_sizes.size() != static_cast<std::size_t>(config.k))
    throw std::domain_error("effect_sizes length must equal k");
  if (!(config.rho >= 0.0 && config.rho < 1.0)) throw std::domain_error("rho must be in [0,1)");
  if (!(config.nominal_alpha > 0.0 && config.nominal_alpha < 1.0))
    throw std::domain_error("nominal_alpha must be in (0,1)");
  if (config.replications < 1) throw std::domain_error("replications must be >= 1");
  resolve_policy(config.policy, config.k);  // validates the policy alpha
}

std::vector<double> draw_family(const SimulationConfig& config, std::uint64_t replication_index) {
  check_config(config);
  SubStream stream(config.seed, replication_index);
  const double shared = stream.next_normal();
  const double sqrt_rho = std::sqrt(config.rho);
  const double sqrt_comp = std::sqrt(1.0 - config.rho);
  std::vector<double> ps(static_cast<std::size_t>(config.k));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double delta = config.effect_sizes.empty() ? 0.0 : config.effect_sizes[i];
    ps[i] = p_value_two_sided(delta + sqrt_rho * shared + sqrt_comp * stream.next_normal());
  }
  return ps;
}

SimulationReport simulate_rates(const SimulationConfig& config_in) {
  SimulationConfig config = config_in;
  if (config.effect_sizes.empty()) config.effect_sizes.assign(config.k, 0.0);
  check_config(config);

  SimulationReport report;
  report.config = config;
  report.alpha_resolved = resolve_policy(config.policy, config.k);
  for (double d : config.effect_sizes)
    if (d == 0.0) ++report.null_members;

  const std::int64_t reps = config.replications;
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (static_cast<std::int64_t>(threads) > reps) threads = static_cast<int>(reps);

  std::vector<Counts> partials(threads);
  for (auto& c : partials) c.per_member.assign(config.k, 0);
  {
    std::vector<std::thread> workers;
    const std::int64_t chunk = (reps + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min(reps, begin + chunk);
      workers.emplace_back([&, t, begin, end] {
        accumulate(config, report.alpha_resolved, begin, end, partials[t]);
      });
    }
    for (auto& w : workers) w.join();
  }

  Counts total;
  total.per_member.assign(config.k, 0);
  for (const auto& c : partials) {
    total.fwer_hits += c.fwer_hits;
    total.null_rejections += c.null_rejections;
    total.null_rejections_sq += c.null_rejections_sq;
    for (long i = 0; i < config.k; ++i) total.per_member[i] += c.per_member[i];
  }

  report.fwer = proportion_estimate(total.fwer_hits, reps);
  const double mean_count = static_cast<double>(total.null_rejections) / static_cast<double>(reps);
  const double mean_sq = static_cast<double>(total.null_rejections_sq) / static_cast<double>(reps);
  report.pfer.estimate = mean_count;
  report.pfer.se = std::sqrt(std::max(0.0, mean_sq - mean_count * mean_count) /
                             static_cast<double>(reps));
  if (report.null_members > 0) {
    if (config.rho == 0.0)
      report.fwer.analytic = fwer_independent(report.alpha_resolved, report.null_members);
    // PFER is linear in the marginals, so it is exact at any rho.
    report.pfer.analytic = pfer(report.alpha_resolved, report.null_members);
  }

  report.per_test_rate.reserve(config.k);
  for (long i = 0; i < config.k; ++i) {
    Estimate e = proportion_estimate(total.per_member[i], reps);
    e.analytic = analytic_power(config.effect_sizes[i], report.alpha_resolved);
    report.per_test_rate.push_back(e);
  }
  return report;
}

}  // namespace alphagate

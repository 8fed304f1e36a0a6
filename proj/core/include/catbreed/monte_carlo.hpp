#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "catbreed/breeding.hpp"

namespace catbreed {

/// Runs fn(0..n-1) on up to `workers` threads with a static partition;
/// results written by index are identical for any worker count.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

struct MonteCarloSample {
  MetricBundle metrics;
  std::vector<double> outcomes;
  std::vector<double> densities;
  bool success = false;
  bool fault_tolerant = false;
};

struct MonteCarloSummary {
  int n_samples = 0;
  std::uint64_t seed = 0;
  double mean_delta_x_db = 0.0, std_delta_x_db = 0.0;
  double mean_delta_p_db = 0.0, std_delta_p_db = 0.0;
  double mean_delta_sym_db = 0.0, std_delta_sym_db = 0.0;
  double min_delta_sym_db = 0.0, max_delta_sym_db = 0.0;
  double success_prob = 0.0;  // Delta_p at least as good as the p = 0 reference
  double ft_prob = 0.0;       // Delta_sym >= threshold
  MetricBundle reference;     // the p = 0 bundle for this configuration
};

struct MonteCarloResult {
  MonteCarloSummary summary;
  std::vector<MonteCarloSample> samples;
};

/// n_samples independent sampled breedings; sample i draws its outcomes from
/// Rng::stream(master_seed, i), so the result is reproducible and identical
/// for any worker count. The p = 0 reference is computed once.
MonteCarloResult monte_carlo_breed_detailed(const BreedingConfig& config, int n_samples,
                                            std::uint64_t master_seed, int workers = 1);

MonteCarloSummary monte_carlo_breed(const BreedingConfig& config, int n_samples,
                                    std::uint64_t master_seed, int workers = 1);

}  // namespace catbreed

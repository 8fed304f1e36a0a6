#include "catbreed/monte_carlo.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace catbreed {

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int i = w; i < n; i += workers) {
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

MonteCarloResult monte_carlo_breed_detailed(const BreedingConfig& config, int n_samples,
                                            std::uint64_t master_seed, int workers) {
  if (n_samples < 1) {
    throw std::invalid_argument("monte_carlo_breed: n_samples must be >= 1");
  }
  config.validate();

  BreedingConfig reference_config = config;
  reference_config.outcomes = OutcomePolicy::zeros(config.n_cats);
  const MetricBundle reference = breed(reference_config).metrics;

  BreedingConfig sample_config = config;
  sample_config.outcomes = OutcomePolicy::sampled(master_seed);

  MonteCarloResult result;
  result.samples.resize(n_samples);
  parallel_for(n_samples, workers, [&](int i) {
    Rng rng = Rng::stream(master_seed, static_cast<std::uint64_t>(i));
    BreedResult run = breed(sample_config, &rng);
    MonteCarloSample& s = result.samples[i];
    s.metrics = run.metrics;
    s.outcomes = std::move(run.outcomes);
    s.densities = std::move(run.densities);
    s.success = success_indicator(run.metrics, reference);
    s.fault_tolerant = run.metrics.delta_sym_db >= kFaultToleranceThresholdDb;
  });

  MonteCarloSummary& sum = result.summary;
  sum.n_samples = n_samples;
  sum.seed = master_seed;
  sum.reference = reference;
  double sx = 0, sxx = 0, sp = 0, spp = 0, ss = 0, sss = 0;
  double min_ds = result.samples[0].metrics.delta_sym_db;
  double max_ds = min_ds;
  int n_success = 0, n_ft = 0;
  for (const auto& s : result.samples) {
    sx += s.metrics.delta_x_db;
    sxx += s.metrics.delta_x_db * s.metrics.delta_x_db;
    sp += s.metrics.delta_p_db;
    spp += s.metrics.delta_p_db * s.metrics.delta_p_db;
    ss += s.metrics.delta_sym_db;
    sss += s.metrics.delta_sym_db * s.metrics.delta_sym_db;
    min_ds = std::min(min_ds, s.metrics.delta_sym_db);
    max_ds = std::max(max_ds, s.metrics.delta_sym_db);
    n_success += s.success ? 1 : 0;
    n_ft += s.fault_tolerant ? 1 : 0;
  }
  const double n = static_cast<double>(n_samples);
  const auto std_of = [n](double s1, double s2) {
    const double var = std::max(0.0, s2 / n - (s1 / n) * (s1 / n));
    return std::sqrt(var);
  };
  sum.mean_delta_x_db = sx / n;
  sum.std_delta_x_db = std_of(sx, sxx);
  sum.mean_delta_p_db = sp / n;
  sum.std_delta_p_db = std_of(sp, spp);
  sum.mean_delta_sym_db = ss / n;
  sum.std_delta_sym_db = std_of(ss, sss);
  sum.min_delta_sym_db = min_ds;
  sum.max_delta_sym_db = max_ds;
  sum.success_prob = n_success / n;
  sum.ft_prob = n_ft / n;
  return result;
}

MonteCarloSummary monte_carlo_breed(const BreedingConfig& config, int n_samples,
                                    std::uint64_t master_seed, int workers) {
  return monte_carlo_breed_detailed(config, n_samples, master_seed, workers).summary;
}

}  // namespace catbreed

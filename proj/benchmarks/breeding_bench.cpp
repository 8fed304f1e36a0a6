#include <benchmark/benchmark.h>

#include "catbreed/breeding.hpp"
#include "catbreed/logsum.hpp"
#include "catbreed/monte_carlo.hpp"

namespace {

using namespace catbreed;

BreedingConfig config_for(int n, double db, double eta) {
  BreedingConfig c;
  c.n_cats = n;
  c.squeezing_db = db;
  c.eta = eta;
  c.outcomes = OutcomePolicy::zeros(n);
  return c;
}

void BM_BreedPostselected(benchmark::State& state) {
  const auto config = config_for(static_cast<int>(state.range(0)), 20.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(breed(config));
  }
}
BENCHMARK(BM_BreedPostselected)->Arg(4)->Arg(9)->Arg(13)->Arg(20);

void BM_BreedLossy(benchmark::State& state) {
  const auto config = config_for(static_cast<int>(state.range(0)), 15.0, 0.96);
  for (auto _ : state) {
    benchmark::DoNotOptimize(breed(config));
  }
}
BENCHMARK(BM_BreedLossy)->Arg(9)->Arg(13);

void BM_BreedSampled(benchmark::State& state) {
  auto config = config_for(static_cast<int>(state.range(0)), 12.0, 0.97);
  config.outcomes = OutcomePolicy::sampled(7);
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = Rng::stream(7, i++);
    benchmark::DoNotOptimize(breed(config, &rng));
  }
}
BENCHMARK(BM_BreedSampled)->Arg(4)->Arg(9);

void BM_LogSumExp(benchmark::State& state) {
  std::vector<std::complex<double>> terms(state.range(0));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    terms[j] = {-static_cast<double>(j % 97), 0.1 * static_cast<double>(j % 13)};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_sum_exp(terms));
  }
}
BENCHMARK(BM_LogSumExp)->Arg(16)->Arg(256)->Arg(4096);

void BM_ReduceEqualMeans(benchmark::State& state) {
  const auto config = config_for(9, 12.0, 0.97);
  const double r = config.squeezing_r();
  const double alpha = amplitude_for_target(9, config.lattice, r);
  const auto cat = squeezed_cat({alpha, r, 0, config.eta});
  GaussianMixtureState acc = cat;
  for (int i = 1; i <= 7; ++i) {
    acc = breed_step(acc, cat, i, 0.0, nullptr).state;
  }
  const auto pre = condition_on_outcome(
      apply_symplectic(tensor(acc, cat), cascade_step_splitter(8)), 0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_equal_means(pre.state));
  }
}
BENCHMARK(BM_ReduceEqualMeans);

void BM_MetricBundle(benchmark::State& state) {
  const auto res = breed(config_for(13, 15.0, 0.97));
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_bundle(res.final_state, Lattice::kQunaught));
  }
}
BENCHMARK(BM_MetricBundle);

}  // namespace

BENCHMARK_MAIN();

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "catbreed/breeding.hpp"
#include "catbreed/gkp_metrics.hpp"
#include "catbreed/monte_carlo.hpp"

using namespace catbreed;
using cd = std::complex<double>;
namespace {
constexpr double kPi = std::numbers::pi;

BreedingConfig qunaught_config(int n, double db, double eta) {
  BreedingConfig c;
  c.n_cats = n;
  c.squeezing_db = db;
  c.eta = eta;
  c.outcomes = OutcomePolicy::zeros(n);
  return c;
}

}  // namespace

TEST_CASE("stabilizer table") {
  const auto logical = stabilizer_displacements(Lattice::kSquareLogical);
  CHECK(logical.alpha_stab == cd(std::sqrt(2.0 * kPi), 0.0));
  CHECK(logical.beta_stab == cd(0.0, std::sqrt(2.0 * kPi)));
  const auto qunaught = stabilizer_displacements(Lattice::kQunaught);
  CHECK(qunaught.alpha_stab == cd(std::sqrt(kPi), 0.0));
  CHECK(qunaught.beta_stab == cd(0.0, std::sqrt(kPi)));
  const double q = std::pow(3.0, 0.25);
  const double kp = 1.0 / q + q, km = 1.0 / q - q;
  const auto hexq = stabilizer_displacements(Lattice::kHexQunaught);
  CHECK(hexq.alpha_stab.real() == doctest::Approx(0.5 * std::sqrt(kPi) * kp));
  CHECK(hexq.alpha_stab.imag() == doctest::Approx(0.5 * std::sqrt(kPi) * km));
  CHECK(hexq.beta_stab.real() == doctest::Approx(0.5 * std::sqrt(kPi) * km));
  CHECK(hexq.beta_stab.imag() == doctest::Approx(0.5 * std::sqrt(kPi) * kp));

  // commutation areas: Im(conj(alpha) beta) = 2 pi (logical), pi (qunaught)
  for (auto [lat, area] : {std::pair{Lattice::kSquareLogical, 2.0 * kPi},
                           {Lattice::kHexLogical, 2.0 * kPi},
                           {Lattice::kQunaught, kPi},
                           {Lattice::kHexQunaught, kPi}}) {
    const auto spec = stabilizer_displacements(lat);
    CHECK(std::imag(std::conj(spec.alpha_stab) * spec.beta_stab) ==
          doctest::Approx(area).epsilon(1e-12));
  }
}

TEST_CASE("vacuum has Delta = 1 for every stabilizer") {
  for (double hbar : {1.0, 2.0}) {
    const auto v = vacuum(1, hbar);
    for (auto lat : {Lattice::kSquareLogical, Lattice::kQunaught, Lattice::kHexLogical,
                     Lattice::kHexQunaught}) {
      const auto spec = stabilizer_displacements(lat);
      CHECK(std::abs(effective_squeezing(v, spec.alpha_stab) - 1.0) < 1e-12);
      CHECK(std::abs(effective_squeezing(v, spec.beta_stab) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("x-squeezed vacuum: Delta_x = e^{-r}, independent of hbar") {
  for (double hbar : {1.0, 2.0}) {
    for (double r : {0.2, 0.7, 1.3815510557964274}) {
      const auto sq = apply_symplectic(vacuum(1, hbar), squeeze(std::exp(r), 0, 1));
      const auto spec = stabilizer_displacements(Lattice::kQunaught);
      CHECK(std::abs(effective_squeezing(sq, spec.beta_stab) - std::exp(-r)) < 1e-10);
    }
  }
}

TEST_CASE("all Delta values are displacement invariant") {
  const auto res = breed(qunaught_config(4, 12.0, 0.96));
  const auto base = metric_bundle(res.final_state, Lattice::kQunaught);
  Eigen::VectorXd d(2);
  d << 0.83, -1.41;
  const auto moved = apply_symplectic(res.final_state, displacement(d));
  const auto shifted = metric_bundle(moved, Lattice::kQunaught);
  CHECK(std::abs(shifted.delta_x - base.delta_x) < 1e-10);
  CHECK(std::abs(shifted.delta_p - base.delta_p) < 1e-10);
  CHECK(std::abs(shifted.delta_sym - base.delta_sym) < 1e-10);
}

TEST_CASE("decibel round trip and bundle identity") {
  for (double delta : {0.1, 0.5, 1.0, 2.5}) {
    CHECK(std::abs(from_db(to_db(delta)) - delta) < 1e-12);
  }
  const auto res = breed(qunaught_config(3, 12.0, 0.95));
  const auto& m = res.metrics;
  CHECK(m.delta_sym * m.delta_sym ==
        doctest::Approx((m.delta_x * m.delta_x + m.delta_p * m.delta_p) / 2.0)
            .epsilon(1e-12));
}

TEST_CASE("success indicator is boundary inclusive") {
  MetricBundle a, b;
  a.delta_p = 0.5;
  b.delta_p = 0.5;
  CHECK(success_indicator(a, b));
  a.delta_p = 0.5000001;
  CHECK_FALSE(success_indicator(a, b));
  a.delta_p = 0.4;
  CHECK(success_indicator(a, b));
}

TEST_CASE("delta_x = delta_p implies delta_sym equals them") {
  MetricBundle m;
  m.delta_x = m.delta_p = 0.37;
  m.delta_sym = std::sqrt((m.delta_x * m.delta_x + m.delta_p * m.delta_p) / 2.0);
  CHECK(m.delta_sym == doctest::Approx(0.37).epsilon(1e-15));
}

TEST_CASE("unphysical characteristic magnitude rejected") {
  // a fake state with trace 1 but |chi| > 1 cannot be produced by the ops;
  // check the |chi| = 0 branch is unreachable for physical states instead
  const auto v = vacuum(1, 2.0);
  CHECK_NOTHROW(effective_squeezing(v, cd(0.3, 0.2)));
}

TEST_CASE("loss degrades Delta_sym monotonically at p = 0") {
  const std::vector<double> etas{1.0, 0.99, 0.98, 0.97, 0.96, 0.95};
  std::vector<double> ds;
  for (double eta : etas) {
    ds.push_back(breed(qunaught_config(6, 12.0, eta)).metrics.delta_sym_db);
  }
  for (std::size_t i = 1; i < ds.size(); ++i) {
    CHECK(ds[i] <= ds[i - 1] + 0.02);
  }
}

TEST_CASE("lossless average Delta_p coincides with the p = 0 value") {
  BreedingConfig c = qunaught_config(4, 12.0, 1.0);
  const auto mc = monte_carlo_breed(c, 600, 4242, 2);
  // Monte Carlo error bound: ~3.5 sigma of the sample mean plus slack
  const double tol = 3.5 * mc.std_delta_p_db / std::sqrt(600.0) + 0.05;
  CHECK(std::abs(mc.mean_delta_p_db - mc.reference.delta_p_db) < tol);
}

TEST_CASE("monte carlo summaries") {
  BreedingConfig c = qunaught_config(3, 12.0, 0.97);
  SUBCASE("single sample with a fixed seed is deterministic") {
    const auto a = monte_carlo_breed(c, 1, 99, 1);
    const auto b = monte_carlo_breed(c, 1, 99, 1);
    CHECK(a.mean_delta_sym_db == b.mean_delta_sym_db);
    CHECK(a.ft_prob == b.ft_prob);
  }
  SUBCASE("worker count does not change the summary") {
    const auto w1 = monte_carlo_breed(c, 64, 7, 1);
    const auto w3 = monte_carlo_breed(c, 64, 7, 3);
    const auto w8 = monte_carlo_breed(c, 64, 7, 8);
    CHECK(w1.mean_delta_sym_db == w3.mean_delta_sym_db);
    CHECK(w1.std_delta_p_db == w3.std_delta_p_db);
    CHECK(w1.success_prob == w3.success_prob);
    CHECK(w1.mean_delta_x_db == w8.mean_delta_x_db);
    CHECK(w1.ft_prob == w8.ft_prob);
    CHECK(w1.min_delta_sym_db == w8.min_delta_sym_db);
    CHECK(w1.max_delta_sym_db == w8.max_delta_sym_db);
  }
  SUBCASE("probabilities stay in range and samples are recorded") {
    const auto detailed = monte_carlo_breed_detailed(c, 32, 5, 2);
    CHECK(detailed.summary.success_prob >= 0.0);
    CHECK(detailed.summary.success_prob <= 1.0);
    CHECK(detailed.summary.ft_prob >= 0.0);
    CHECK(detailed.summary.ft_prob <= 1.0);
    REQUIRE(detailed.samples.size() == 32);
    for (const auto& s : detailed.samples) {
      CHECK(s.outcomes.size() == 2);
      CHECK(s.densities.size() == 2);
    }
  }
}

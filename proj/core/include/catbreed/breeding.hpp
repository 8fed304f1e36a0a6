#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catbreed/cat_state.hpp"
#include "catbreed/gaussian_mixture.hpp"
#include "catbreed/gkp_metrics.hpp"
#include "catbreed/homodyne.hpp"
#include "catbreed/rng.hpp"

namespace catbreed {

/// How the homodyne outcome of each breeding step is chosen: a fixed vector
/// of length N-1, or sampled from the outcome distribution with the given
/// master seed.
struct OutcomePolicy {
  enum class Kind { kFixed, kSampled };
  Kind kind = Kind::kFixed;
  std::vector<double> fixed;
  std::uint64_t seed = 0;

  static OutcomePolicy zeros(int n_cats) {
    return {Kind::kFixed, std::vector<double>(static_cast<std::size_t>(n_cats - 1), 0.0), 0};
  }
  static OutcomePolicy sampled(std::uint64_t seed) { return {Kind::kSampled, {}, seed}; }
};

/// Full breeding run: N seed cats with the given squeezing (in dB, positive
/// = squeezed x) and uniform loss, amplitudes set for the target lattice.
/// `prescale` multiplies the amplitude by 1/sqrt(eta) before the loss.
struct BreedingConfig {
  int n_cats = 2;
  Lattice lattice = Lattice::kQunaught;
  double squeezing_db = 12.0;
  double eta = 1.0;
  std::vector<int> parities;  // length n_cats; empty means all even
  OutcomePolicy outcomes;
  double hbar = kDefaultHbar;
  bool prescale = false;

  double squeezing_r() const;
  void validate() const;
};

struct StepResult {
  GaussianMixtureState state;
  OutcomeRecord outcome;
};

struct BreedResult {
  GaussianMixtureState final_state;
  std::vector<double> outcomes;
  std::vector<double> densities;
  MetricBundle metrics;
};

/// Symplectic matrix of the full N-mode splitter cascade acting on the x
/// block (the p block is identical): rows 1..N-1 are the measured modes,
/// row N is the balanced combination (1/sqrt(N)) (1, ..., 1).
Eigen::MatrixXd cascade_matrix(int n_cats);

/// Two-mode splitter of cascade step i (1-based) on (accumulated, cat):
/// the measured first mode becomes (acc - sqrt(i) cat)/sqrt(i+1), matching
/// the cascade matrix row i exactly.
SymplecticTransform cascade_step_splitter(int step_index);

/// One breeding iteration: tensor the accumulated state with a fresh cat,
/// apply the step splitter, pick or sample the p outcome of the first mode,
/// condition, reduce, and renormalize. `rng` is required when `outcome` is
/// empty (sampling).
StepResult breed_step(const GaussianMixtureState& state_in, const GaussianMixtureState& cat,
                      int step_index, std::optional<double> outcome, Rng* rng);

/// Merges terms whose means agree component-wise within tol; merged weights
/// are log-sum-exp'd and fully cancelled groups are dropped. Output order is
/// lexicographic in the mean components (real, then imaginary parts).
GaussianMixtureState reduce_equal_means(const GaussianMixtureState& state, double tol = 1e-9);

/// Feedforward alignment: squeeze by mu / (sqrt(N) mu_target) toward the
/// lattice spacing; hex lattices get the additional hex squeeze.
GaussianMixtureState align_to_lattice(const GaussianMixtureState& state, double mu, int n_cats,
                                      Lattice lattice);

/// Runs the N-1 breeding iterations and evaluates the metric bundle against
/// the configured lattice. The final state carries (N+1)^2 terms.
BreedResult breed(const BreedingConfig& config, Rng* rng = nullptr);

}  // namespace catbreed

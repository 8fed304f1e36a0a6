#include "catbreed/breeding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "catbreed/logsum.hpp"

namespace catbreed {

double BreedingConfig::squeezing_r() const { return squeezing_db * std::numbers::ln10 / 20.0; }

void BreedingConfig::validate() const {
  if (n_cats < 2) {
    throw std::invalid_argument("n_cats must be >= 2");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must be in (0, 1]");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be > 0");
  }
  if (!parities.empty() && static_cast<int>(parities.size()) != n_cats) {
    throw std::invalid_argument("parities length must equal n_cats (got " +
                                std::to_string(parities.size()) + ")");
  }
  for (int k : parities) {
    if (k != 0 && k != 1) {
      throw std::invalid_argument("parities must be 0 or 1");
    }
  }
  if (outcomes.kind == OutcomePolicy::Kind::kFixed &&
      static_cast<int>(outcomes.fixed.size()) != n_cats - 1) {
    throw std::invalid_argument("fixed outcome vector length must equal n_cats - 1");
  }
}

Eigen::MatrixXd cascade_matrix(int n_cats) {
  if (n_cats < 2) {
    throw std::invalid_argument("cascade_matrix: n_cats must be >= 2");
  }
  const int n = n_cats;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double head = 1.0 / std::sqrt(static_cast<double>(i) * (i + 1));
    for (int j = 0; j < i; ++j) {
      b(i - 1, j) = head;
    }
    b(i - 1, i) = -std::sqrt(static_cast<double>(i) / (i + 1));
  }
  for (int j = 0; j < n; ++j) {
    b(n - 1, j) = 1.0 / std::sqrt(static_cast<double>(n));
  }
  return b;
}

SymplecticTransform cascade_step_splitter(int step_index) {
  if (step_index < 1) {
    throw std::invalid_argument("step index must be >= 1");
  }
  return beam_splitter(1.0 / (step_index + 1.0), 0, 1, 2);
}

StepResult breed_step(const GaussianMixtureState& state_in, const GaussianMixtureState& cat,
                      int step_index, std::optional<double> outcome, Rng* rng) {
  if (state_in.n_modes != 1 || cat.n_modes != 1) {
    throw std::invalid_argument("breed_step operates on single-mode states");
  }
  GaussianMixtureState two = apply_symplectic(tensor(state_in, cat),
                                              cascade_step_splitter(step_index));
  OutcomeRecord record;
  if (outcome.has_value()) {
    record.value = *outcome;
    record.density = homodyne_pdf(two, 0, record.value);
    record.attempts = 1;
  } else {
    if (rng == nullptr) {
      throw std::invalid_argument("breed_step: sampling requires an rng");
    }
    record = sample_homodyne(two, 0, *rng);
  }
  Conditioned cond = condition_on_outcome(two, 0, record.value);
  StepResult result{reduce_equal_means(cond.state), record};
  return result;
}

GaussianMixtureState reduce_equal_means(const GaussianMixtureState& state, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("reduce_equal_means: tol must be > 0");
  }
  const int dim = 2 * state.n_modes;
  const int n = state.n_terms();

  const auto mean_close = [&](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (int i = 0; i < dim; ++i) {
      if (std::abs(a(i).real() - b(i).real()) > tol ||
          std::abs(a(i).imag() - b(i).imag()) > tol) {
        return false;
      }
    }
    return true;
  };

  // Greedy grouping against the first member of each group. Term counts stay
  // small ((N+1)^2 scale), so the quadratic scan is fine.
  std::vector<bool> used(n, false);
  std::vector<GaussianTerm> merged;
  std::vector<std::complex<double>> group;
  for (int i = 0; i < n; ++i) {
    if (used[i]) {
      continue;
    }
    used[i] = true;
    group.assign(1, state.terms[i].log_weight);
    for (int j = i + 1; j < n; ++j) {
      if (!used[j] && mean_close(state.terms[j].mean, state.terms[i].mean)) {
        used[j] = true;
        group.push_back(state.terms[j].log_weight);
      }
    }
    const std::complex<double> w = log_sum_exp(group);
    if (std::isfinite(w.real())) {  // fully cancelled groups are dropped
      merged.push_back({w, state.terms[i].mean});
    }
  }
  if (merged.empty()) {
    throw std::runtime_error("reduce_equal_means: all terms cancelled");
  }
  // Deterministic output order: lexicographic in the mean components.
  std::sort(merged.begin(), merged.end(), [&](const GaussianTerm& a, const GaussianTerm& b) {
    for (int i = 0; i < dim; ++i) {
      if (a.mean(i).real() != b.mean(i).real()) return a.mean(i).real() < b.mean(i).real();
      if (a.mean(i).imag() != b.mean(i).imag()) return a.mean(i).imag() < b.mean(i).imag();
    }
    return false;
  });

  GaussianMixtureState out;
  out.n_modes = state.n_modes;
  out.hbar = state.hbar;
  out.cov = state.cov;
  out.terms = std::move(merged);
  return out;
}

GaussianMixtureState align_to_lattice(const GaussianMixtureState& state, double mu, int n_cats,
                                      Lattice lattice) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("align_to_lattice: mu must be > 0");
  }
  if (n_cats < 1) {
    throw std::invalid_argument("align_to_lattice: n_cats must be >= 1");
  }
  const double pi = std::numbers::pi;
  const bool logical = lattice == Lattice::kSquareLogical || lattice == Lattice::kHexLogical;
  const double mu_target =
      logical ? std::sqrt(pi * state.hbar) : std::sqrt(pi * state.hbar / 2.0);
  const double z = mu / (std::sqrt(static_cast<double>(n_cats)) * mu_target);

  GaussianMixtureState out = state;
  if (std::abs(z - 1.0) > 1e-15) {
    out = apply_symplectic(out, squeeze(z, 0, state.n_modes));
  }
  if (lattice == Lattice::kHexLogical || lattice == Lattice::kHexQunaught) {
    out = apply_symplectic(out, hex_squeeze(0, state.n_modes));
  }
  return out;
}

BreedResult breed(const BreedingConfig& config, Rng* rng) {
  config.validate();
  const double r = config.squeezing_r();
  double alpha = amplitude_for_target(config.n_cats, config.lattice, r, config.hbar);
  if (config.prescale) {
    alpha /= std::sqrt(config.eta);
  }
  std::vector<int> parities = config.parities;
  if (parities.empty()) {
    parities.assign(config.n_cats, 0);
  }

  const bool sampling = config.outcomes.kind == OutcomePolicy::Kind::kSampled;
  Rng local = Rng::stream(config.outcomes.seed, 0);
  if (sampling && rng == nullptr) {
    rng = &local;
  }

  // Identical specs share one state; distinct parities get their own.
  GaussianMixtureState cat_even = squeezed_cat({alpha, r, 0, config.eta}, config.hbar);
  std::optional<GaussianMixtureState> cat_odd;
  const auto cat_for = [&](int index) -> const GaussianMixtureState& {
    if (parities[index] == 0) {
      return cat_even;
    }
    if (!cat_odd.has_value()) {
      cat_odd = squeezed_cat({alpha, r, 1, config.eta}, config.hbar);
    }
    return *cat_odd;
  };

  BreedResult result;
  GaussianMixtureState acc = cat_for(0);
  for (int i = 1; i < config.n_cats; ++i) {
    std::optional<double> outcome;
    if (!sampling) {
      outcome = config.outcomes.fixed[i - 1];
    }
    StepResult step = breed_step(acc, cat_for(i), i, outcome, rng);
    acc = std::move(step.state);
    result.outcomes.push_back(step.outcome.value);
    result.densities.push_back(step.outcome.density);
  }

  const double mu = std::sqrt(2.0 * config.hbar) *
                    amplitude_for_target(config.n_cats, config.lattice, r, config.hbar) *
                    std::exp(-r);
  result.final_state = align_to_lattice(acc, mu, config.n_cats, config.lattice);
  result.metrics = metric_bundle(result.final_state, config.lattice);
  return result;
}

}  // namespace catbreed

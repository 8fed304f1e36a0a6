#pragma once

#include "catbreed/gaussian_mixture.hpp"
#include "catbreed/rng.hpp"

namespace catbreed {

/// A homodyne outcome with its probability density and the number of
/// rejection-sampler proposals it took (1 for picked outcomes).
struct OutcomeRecord {
  double value = 0.0;
  double density = 0.0;
  int attempts = 1;
};

/// Probability density of observing m on the p quadrature of `mode`:
/// P(m) = sum_j e^{w_j} G(m; a_jp, A_p) with the complex p-means a_jp and the
/// marginal variance A_p. Real and non-negative for physical states.
double homodyne_pdf(const GaussianMixtureState& state, int mode, double m);

/// Rejection sampling of a p-homodyne outcome. The envelope takes the
/// absolute value of the coefficients, g(m) = sum_j e^{Re w_j + beta_j^2/(2A_p)}
/// G(m; alpha_j, A_p) >= P(m): draw a peak from the discrete coefficient
/// distribution, then m ~ Normal(alpha_j, A_p), accept iff y <= P(m) with
/// y uniform on [0, g(m)]. When every alpha_j = 0 (phase-less breeding) the
/// proposal collapses to Normal(0, A_p) directly.
OutcomeRecord sample_homodyne(const GaussianMixtureState& state, int mode, Rng& rng);

struct Conditioned {
  GaussianMixtureState state;
  double log_density = 0.0;
};

/// Conditions on outcome m of the p quadrature of `mode` and removes that
/// mode. Covariance and means follow the partial Gaussian measurement rules;
/// each log-weight picks up -(a_jp - m)^2/(2 A_p) - ln(2 pi A_p)/2 so the
/// pre-normalization trace equals P(m). The returned state is normalized and
/// log_density = ln P(m).
Conditioned condition_on_outcome(const GaussianMixtureState& state, int mode, double m);

inline constexpr int kMaxRejectionAttempts = 1'000'000;

}  // namespace catbreed

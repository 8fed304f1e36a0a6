#pragma once

#include "catbreed/gaussian_mixture.hpp"
#include "catbreed/gkp_metrics.hpp"

namespace catbreed {

/// Parameters of a seed squeezed cat: coherent amplitude alpha >= 0 along x,
/// squeezing r (r > 0 squeezes x), parity in {0, 1}, and the transmissivity
/// of the loss channel applied after preparation.
struct CatSpec {
  double alpha = 1.0;
  double r = 0.0;
  int parity = 0;
  double eta = 1.0;
};

/// Normalized Wigner function of a lossy squeezed cat as four Gaussians:
/// outer peaks at ±(sqrt(2 hbar) alpha e^{-r}, 0) with log-weight 0, fringe
/// terms at ±(0, i sqrt(2 hbar) alpha e^{r}) with log-weight
/// -2 alpha^2 + i pi parity, cov = (hbar/2) diag(e^{-2r}, e^{2r}); the loss
/// channel is applied before normalization.
GaussianMixtureState squeezed_cat(const CatSpec& spec, double hbar = kDefaultHbar);

/// Cat amplitude needed so that breeding n_cats copies lands the grid on the
/// target lattice: peak position mu = sqrt(N pi hbar) (logical) or
/// sqrt(N pi hbar / 2) (qunaught); hex variants share the pre-hex spacing.
/// alpha = mu e^{r} / sqrt(2 hbar).
double amplitude_for_target(int n_cats, Lattice lattice, double r, double hbar = kDefaultHbar);

}  // namespace catbreed

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "catbreed/cat_state.hpp"

namespace catbreed {

/// Density matrix in a truncated number basis. Brute-force reference for
/// desk-scale cross-validation of the Gaussian-mixture pipeline (N = 2-3,
/// small amplitudes); never used on the fast path.
struct FockDensity {
  int dim = 0;
  double hbar = kDefaultHbar;
  Eigen::MatrixXcd matrix;

  /// Population of the top levels; large values signal an insufficient cutoff.
  double tail_population(int levels = 3) const;
};

inline constexpr int kDefaultFockCutoff = 60;
inline constexpr double kFockTailTol = 1e-8;

/// Lossy squeezed cat in the number basis: squeeze applied to the coherent
/// superposition, then the attenuation Kraus sum. Throws if the truncated
/// tail holds more than kFockTailTol population.
FockDensity cat_density_fock(const CatSpec& spec, int cutoff = kDefaultFockCutoff,
                             double hbar = kDefaultHbar);

struct FockBreedResult {
  FockDensity rho;
  std::vector<double> densities;
};

/// Breeds the given cats through the splitter cascade, conditioning each
/// step on the supplied p outcome (the oracle never samples). N in {2, 3}.
FockBreedResult breed_fock(const std::vector<CatSpec>& cats,
                           const std::vector<double>& p_outcomes,
                           int cutoff = kDefaultFockCutoff, double hbar = kDefaultHbar);

/// Displacement operator matrix exp(beta a^dag - beta* a) in the truncated
/// number basis.
Eigen::MatrixXcd displacement_matrix_fock(std::complex<double> beta, int cutoff);

/// Effective squeezing from the number-basis <D(beta)>.
double effective_squeezing_fock(const FockDensity& rho, std::complex<double> beta);

/// Wigner function W(x, p) = <D(g) P D(g)^dag> / (pi hbar), g = (x+ip)/sqrt(2 hbar).
double wigner_fock(const FockDensity& rho, double x, double p);

}  // namespace catbreed

#pragma once

#include <complex>
#include <string>

#include "catbreed/gaussian_mixture.hpp"

namespace catbreed {

/// Grid-state lattices: square logical, qunaught (sensor), and their
/// hexagonal counterparts.
enum class Lattice { kSquareLogical, kQunaught, kHexLogical, kHexQunaught };

std::string lattice_name(Lattice lattice);
Lattice lattice_from_name(const std::string& name);

/// The two stabilizer displacements (alpha, beta) of a lattice.
/// Im(conj(alpha) * beta) is 2 pi for logical lattices and pi for qunaught
/// ones (the code-space commutation condition).
struct LatticeSpec {
  Lattice name;
  std::complex<double> alpha_stab;
  std::complex<double> beta_stab;
};

LatticeSpec stabilizer_displacements(Lattice lattice);

/// Effective squeezing Delta = sqrt(-2/|b|^2 * ln|<D(b)>|) for a stabilizer
/// displacement b, evaluated through the characteristic function. Invariant
/// under displacements of the state. Throws if |<D(b)>| >= 1 beyond
/// tolerance (unphysical) or vanishes (Delta undefined).
double effective_squeezing(const GaussianMixtureState& state, std::complex<double> stab);

/// Decibel conversions: to_db(Delta) = -10 log10(Delta^2).
double to_db(double delta);
double from_db(double db);

struct MetricBundle {
  double delta_x = 1.0;
  double delta_p = 1.0;
  double delta_sym = 1.0;
  double delta_x_db = 0.0;
  double delta_p_db = 0.0;
  double delta_sym_db = 0.0;
};

/// Delta_x from the beta stabilizer, Delta_p from alpha, and the symmetric
/// combination Delta_sym^2 = (Delta_x^2 + Delta_p^2)/2.
MetricBundle metric_bundle(const GaussianMixtureState& state, Lattice lattice);

/// Success criterion: the sampled Delta_p is at least as good as the
/// reference (linear Delta_p <= reference, boundary inclusive).
bool success_indicator(const MetricBundle& sample, const MetricBundle& reference);

/// Fault-tolerance threshold on the qunaught symmetric effective squeezing
/// (decoder-dependent constant; current published value).
inline constexpr double kFaultToleranceThresholdDb = 9.75;

}  // namespace catbreed

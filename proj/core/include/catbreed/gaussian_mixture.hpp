#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "catbreed/symplectic.hpp"

namespace catbreed {

inline constexpr double kDefaultHbar = 2.0;

/// One Gaussian of a mixture: complex mean of length 2N in quadrature
/// ordering (x1, p1, ..., xN, pN) and a complex log-domain weight. Sign
/// and phase factors live in the imaginary part of the log-weight
/// ((-1) is stored as i*pi).
struct GaussianTerm {
  std::complex<double> log_weight;
  Eigen::VectorXcd mean;
};

/// N-mode state as a linear combination of Gaussians sharing one real
/// covariance matrix. Values are immutable after construction: every
/// operation returns a new state, so instances can be shared read-only
/// across threads.
///
/// Physical states are conjugate-closed: terms occur in complex-conjugate
/// pairs (possibly self-paired), which keeps the Wigner function real.
struct GaussianMixtureState {
  int n_modes = 0;
  double hbar = kDefaultHbar;
  std::vector<GaussianTerm> terms;
  Eigen::MatrixXd cov;

  int n_terms() const { return static_cast<int>(terms.size()); }

  /// Sum of e^{w_j}; each Gaussian integrates to its weight, so this is the
  /// trace of the represented operator.
  std::complex<double> trace() const;
};

/// Validates dimensions, covariance symmetry/positive-definiteness and
/// log-weight finiteness; throws std::invalid_argument on violation.
GaussianMixtureState make_state(int n_modes, double hbar, std::vector<GaussianTerm> terms,
                                Eigen::MatrixXd cov);

/// Ground state: one term, zero mean, cov = (hbar/2) I.
GaussianMixtureState vacuum(int n_modes, double hbar = kDefaultHbar);

/// Gaussian unitary: means -> S mu + d, cov -> S cov S^T, weights unchanged.
GaussianMixtureState apply_symplectic(const GaussianMixtureState& state,
                                      const SymplecticTransform& t);

/// Photon loss of transmissivity eta on the selected modes: means scaled by
/// sqrt(eta), cov -> eta cov + (1-eta)(hbar/2) I on those modes.
GaussianMixtureState apply_loss(const GaussianMixtureState& state, double eta,
                                std::span<const int> modes);

/// Loss on every mode.
GaussianMixtureState apply_loss(const GaussianMixtureState& state, double eta);

/// Product state: means direct-summed, covariance block-diagonal,
/// log-weights added pairwise.
GaussianMixtureState tensor(const GaussianMixtureState& a, const GaussianMixtureState& b);

/// Rescales to unit trace by subtracting ln(trace) from every log-weight.
/// Throws if the trace is non-positive or has a phase beyond tolerance
/// (either signals broken conjugate closure).
GaussianMixtureState normalize(const GaussianMixtureState& state);

/// Wigner function at real phase-space points (each of length 2N). The
/// imaginary residue of the sum is asserted below tolerance and discarded.
std::vector<double> evaluate_wigner(const GaussianMixtureState& state,
                                    std::span<const Eigen::VectorXd> points);

double evaluate_wigner(const GaussianMixtureState& state, const Eigen::VectorXd& point);

/// Characteristic function chi(alpha) = <D(alpha)> of a normalized state,
/// one complex displacement per mode:
///   sum_j e^{w_j} exp[-(1/hbar)(Omega a)^T sigma (Omega a)
///                     + i sqrt(2/hbar) (Omega a)^T mu_j]
/// with a = (Re a1, Im a1, ...). At hbar = 2 this is the textbook form.
std::complex<double> evaluate_characteristic(const GaussianMixtureState& state,
                                             const Eigen::VectorXcd& alpha);

/// True when every term's conjugate partner is present within tol.
bool is_conjugate_closed(const GaussianMixtureState& state, double tol = 1e-9);

}  // namespace catbreed

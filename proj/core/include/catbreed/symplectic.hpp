#pragma once

#include <Eigen/Dense>

namespace catbreed {

/// Phase-space map of a Gaussian unitary: q -> S q + d on quadratures
/// ordered (x1, p1, ..., xN, pN).
struct SymplecticTransform {
  Eigen::MatrixXd S;
  Eigen::VectorXd d;

  int n_modes() const { return static_cast<int>(S.rows()) / 2; }

  static SymplecticTransform identity(int n_modes);
};

/// Block-diagonal symplectic form, [[0, 1], [-1, 0]] per mode.
Eigen::MatrixXd omega_matrix(int n_modes);

/// Max-norm of S Omega S^T - Omega.
double symplectic_defect(const Eigen::MatrixXd& S);

bool is_symplectic(const Eigen::MatrixXd& S, double tol = 1e-10);

/// Pure displacement; d has length 2 * n_modes.
SymplecticTransform displacement(const Eigen::VectorXd& d);

/// Squeeze of one mode: x -> x/z, p -> z*p. Requires z > 0; z > 1 squeezes x.
SymplecticTransform squeeze(double z, int mode, int n_modes);

/// Rotation of one mode: x -> cos(phi) x - sin(phi) p, p -> cos(phi) p + sin(phi) x.
SymplecticTransform rotation(double phi, int mode, int n_modes);

/// Beam splitter with reflectivity eta in [0, 1]:
///   q1 -> sqrt(eta) q1 - sqrt(1-eta) q2,  q2 -> sqrt(1-eta) q1 + sqrt(eta) q2.
SymplecticTransform beam_splitter(double eta, int mode1, int mode2, int n_modes);

/// Squeeze by 3^(1/4) along the pi/4 axis; maps the square lattice onto the
/// hexagonal one. Block (1/2) [[k+, k-], [k-, k+]] with k± = 3^(-1/4) ± 3^(1/4).
SymplecticTransform hex_squeeze(int mode, int n_modes);

/// Composition: apply `first`, then `second`.
SymplecticTransform compose(const SymplecticTransform& second, const SymplecticTransform& first);

}  // namespace catbreed

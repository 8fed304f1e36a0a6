#include "catbreed/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace catbreed {

namespace {

void check_mode(int mode, int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be >= 1");
  }
  if (mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("mode index " + std::to_string(mode) + " out of range for " +
                                std::to_string(n_modes) + " modes");
  }
}

}  // namespace

SymplecticTransform SymplecticTransform::identity(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be >= 1");
  }
  return {Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes), Eigen::VectorXd::Zero(2 * n_modes)};
}

Eigen::MatrixXd omega_matrix(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

double symplectic_defect(const Eigen::MatrixXd& S) {
  const int n = static_cast<int>(S.rows()) / 2;
  Eigen::MatrixXd omega = omega_matrix(n);
  return (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff();
}

bool is_symplectic(const Eigen::MatrixXd& S, double tol) {
  return S.rows() == S.cols() && S.rows() % 2 == 0 && symplectic_defect(S) <= tol;
}

SymplecticTransform displacement(const Eigen::VectorXd& d) {
  if (d.size() % 2 != 0 || d.size() == 0) {
    throw std::invalid_argument("displacement vector must have positive even length");
  }
  const int n = static_cast<int>(d.size()) / 2;
  return {Eigen::MatrixXd::Identity(2 * n, 2 * n), d};
}

SymplecticTransform squeeze(double z, int mode, int n_modes) {
  check_mode(mode, n_modes);
  if (!(z > 0.0)) {
    throw std::invalid_argument("squeeze factor must be > 0");
  }
  SymplecticTransform t = SymplecticTransform::identity(n_modes);
  t.S(2 * mode, 2 * mode) = 1.0 / z;
  t.S(2 * mode + 1, 2 * mode + 1) = z;
  return t;
}

SymplecticTransform rotation(double phi, int mode, int n_modes) {
  check_mode(mode, n_modes);
  SymplecticTransform t = SymplecticTransform::identity(n_modes);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  t.S(2 * mode, 2 * mode) = c;
  t.S(2 * mode, 2 * mode + 1) = -s;
  t.S(2 * mode + 1, 2 * mode) = s;
  t.S(2 * mode + 1, 2 * mode + 1) = c;
  return t;
}

SymplecticTransform beam_splitter(double eta, int mode1, int mode2, int n_modes) {
  check_mode(mode1, n_modes);
  check_mode(mode2, n_modes);
  if (mode1 == mode2) {
    throw std::invalid_argument("beam splitter modes must be distinct");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("beam splitter reflectivity must be in [0, 1]");
  }
  const double r = std::sqrt(eta);
  const double tr = std::sqrt(1.0 - eta);
  SymplecticTransform t = SymplecticTransform::identity(n_modes);
  for (int q = 0; q < 2; ++q) {
    const int i = 2 * mode1 + q;
    const int j = 2 * mode2 + q;
    t.S(i, i) = r;
    t.S(i, j) = -tr;
    t.S(j, i) = tr;
    t.S(j, j) = r;
  }
  return t;
}

SymplecticTransform hex_squeeze(int mode, int n_modes) {
  check_mode(mode, n_modes);
  const double q = std::pow(3.0, 0.25);
  const double kp = 1.0 / q + q;
  const double km = 1.0 / q - q;
  SymplecticTransform t = SymplecticTransform::identity(n_modes);
  t.S(2 * mode, 2 * mode) = 0.5 * kp;
  t.S(2 * mode, 2 * mode + 1) = 0.5 * km;
  t.S(2 * mode + 1, 2 * mode) = 0.5 * km;
  t.S(2 * mode + 1, 2 * mode + 1) = 0.5 * kp;
  return t;
}

SymplecticTransform compose(const SymplecticTransform& second, const SymplecticTransform& first) {
  if (second.S.rows() != first.S.rows()) {
    throw std::invalid_argument("compose: mode count mismatch");
  }
  return {second.S * first.S, second.S * first.d + second.d};
}

}  // namespace catbreed

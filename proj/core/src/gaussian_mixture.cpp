#include "catbreed/gaussian_mixture.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catbreed/logsum.hpp"

namespace catbreed {

namespace {

constexpr double kCovSymTol = 1e-12;
constexpr double kTracePhaseTol = 1e-8;
constexpr double kImagResidueTol = 1e-10;
constexpr double kNormalizedTol = 1e-8;

void check_finite_weights(const std::vector<GaussianTerm>& terms) {
  for (const auto& t : terms) {
    if (!std::isfinite(t.log_weight.real()) || !std::isfinite(t.log_weight.imag())) {
      throw std::runtime_error("GaussianTerm log_weight is not finite");
    }
  }
}

}  // namespace

std::complex<double> GaussianMixtureState::trace() const {
  std::vector<std::complex<double>> ws;
  ws.reserve(terms.size());
  for (const auto& t : terms) {
    ws.push_back(t.log_weight);
  }
  return std::exp(log_sum_exp(ws));
}

GaussianMixtureState make_state(int n_modes, double hbar, std::vector<GaussianTerm> terms,
                                Eigen::MatrixXd cov) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be >= 1");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be > 0");
  }
  const int dim = 2 * n_modes;
  if (cov.rows() != dim || cov.cols() != dim) {
    throw std::invalid_argument("covariance must be 2N x 2N");
  }
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kCovSymTol) {
    throw std::invalid_argument("covariance must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("covariance must be positive definite");
  }
  if (terms.empty()) {
    throw std::invalid_argument("state needs at least one term");
  }
  for (const auto& t : terms) {
    if (t.mean.size() != dim) {
      throw std::invalid_argument("term mean length must be 2N");
    }
  }
  check_finite_weights(terms);
  return {n_modes, hbar, std::move(terms), std::move(cov)};
}

GaussianMixtureState vacuum(int n_modes, double hbar) {
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be >= 1");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be > 0");
  }
  GaussianTerm term{{0.0, 0.0}, Eigen::VectorXcd::Zero(2 * n_modes)};
  return {n_modes, hbar, {term},
          (hbar / 2.0) * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes)};
}

GaussianMixtureState apply_symplectic(const GaussianMixtureState& state,
                                      const SymplecticTransform& t) {
  if (t.S.rows() != 2 * state.n_modes || t.S.cols() != 2 * state.n_modes ||
      t.d.size() != 2 * state.n_modes) {
    throw std::invalid_argument("apply_symplectic: dimension mismatch");
  }
  if (!is_symplectic(t.S)) {
    throw std::invalid_argument("apply_symplectic: S is not symplectic");
  }
  GaussianMixtureState out = state;
  for (auto& term : out.terms) {
    const Eigen::VectorXd re = t.S * term.mean.real() + t.d;
    const Eigen::VectorXd im = t.S * term.mean.imag();
    term.mean = re.cast<std::complex<double>>() +
                std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
  }
  out.cov = t.S * state.cov * t.S.transpose();
  return out;
}

GaussianMixtureState apply_loss(const GaussianMixtureState& state, double eta,
                                std::span<const int> modes) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("loss transmissivity must be in (0, 1]");
  }
  for (int m : modes) {
    if (m < 0 || m >= state.n_modes) {
      throw std::invalid_argument("apply_loss: mode index out of range");
    }
  }
  const double root = std::sqrt(eta);
  GaussianMixtureState out = state;
  for (auto& term : out.terms) {
    for (int m : modes) {
      term.mean(2 * m) *= root;
      term.mean(2 * m + 1) *= root;
    }
  }
  // cov -> X cov X^T + Y with X diagonal sqrt(eta) on the selected modes.
  Eigen::VectorXd x = Eigen::VectorXd::Ones(2 * state.n_modes);
  for (int m : modes) {
    x(2 * m) = root;
    x(2 * m + 1) = root;
  }
  out.cov = x.asDiagonal() * state.cov * x.asDiagonal();
  for (int m : modes) {
    out.cov(2 * m, 2 * m) += (1.0 - eta) * state.hbar / 2.0;
    out.cov(2 * m + 1, 2 * m + 1) += (1.0 - eta) * state.hbar / 2.0;
  }
  return out;
}

GaussianMixtureState apply_loss(const GaussianMixtureState& state, double eta) {
  std::vector<int> all(state.n_modes);
  for (int m = 0; m < state.n_modes; ++m) {
    all[m] = m;
  }
  return apply_loss(state, eta, all);
}

GaussianMixtureState tensor(const GaussianMixtureState& a, const GaussianMixtureState& b) {
  if (a.hbar != b.hbar) {
    throw std::invalid_argument("tensor: hbar mismatch");
  }
  GaussianMixtureState out;
  out.n_modes = a.n_modes + b.n_modes;
  out.hbar = a.hbar;
  out.terms.reserve(a.terms.size() * b.terms.size());
  const int da = 2 * a.n_modes;
  const int db = 2 * b.n_modes;
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      GaussianTerm t;
      t.log_weight = ta.log_weight + tb.log_weight;
      t.mean.resize(da + db);
      t.mean.head(da) = ta.mean;
      t.mean.tail(db) = tb.mean;
      out.terms.push_back(std::move(t));
    }
  }
  out.cov = Eigen::MatrixXd::Zero(da + db, da + db);
  out.cov.topLeftCorner(da, da) = a.cov;
  out.cov.bottomRightCorner(db, db) = b.cov;
  return out;
}

GaussianMixtureState normalize(const GaussianMixtureState& state) {
  std::vector<std::complex<double>> ws;
  ws.reserve(state.terms.size());
  for (const auto& t : state.terms) {
    ws.push_back(t.log_weight);
  }
  const std::complex<double> log_trace = log_sum_exp(ws);
  if (!std::isfinite(log_trace.real())) {
    throw std::runtime_error("normalize: trace is zero or invalid");
  }
  // arg(trace) folded into (-pi, pi]; a real positive trace has phase ~ 0.
  double phase = std::remainder(log_trace.imag(), 2.0 * std::numbers::pi);
  if (std::abs(phase) > kTracePhaseTol) {
    throw std::runtime_error("normalize: trace is not real positive (phase " +
                             std::to_string(phase) + "); conjugate closure likely broken");
  }
  GaussianMixtureState out = state;
  for (auto& t : out.terms) {
    t.log_weight -= log_trace.real();
  }
  return out;
}

std::vector<double> evaluate_wigner(const GaussianMixtureState& state,
                                    std::span<const Eigen::VectorXd> points) {
  const int dim = 2 * state.n_modes;
  Eigen::LLT<Eigen::MatrixXd> llt(state.cov);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("evaluate_wigner: covariance not positive definite");
  }
  // ln det(2 pi sigma) via the Cholesky factor.
  double log_det = dim * std::log(2.0 * std::numbers::pi);
  for (int i = 0; i < dim; ++i) {
    log_det += 2.0 * std::log(llt.matrixL()(i, i));
  }
  const Eigen::MatrixXd prec = llt.solve(Eigen::MatrixXd::Identity(dim, dim));
  const Eigen::MatrixXcd precc = prec.cast<std::complex<double>>();

  std::vector<double> values;
  values.reserve(points.size());
  std::vector<std::complex<double>> terms(state.terms.size());
  for (const auto& q : points) {
    if (q.size() != dim) {
      throw std::invalid_argument("evaluate_wigner: point length must be 2N");
    }
    for (std::size_t j = 0; j < state.terms.size(); ++j) {
      const Eigen::VectorXcd z = q.cast<std::complex<double>>() - state.terms[j].mean;
      // z^T prec z without conjugation (dot() would conjugate the left side).
      const std::complex<double> quad = z.cwiseProduct(precc * z).sum();
      terms[j] = state.terms[j].log_weight - 0.5 * quad - 0.5 * log_det;
    }
    const std::complex<double> value = std::exp(log_sum_exp(terms));
    const double scale = std::max(1.0, std::abs(value.real()));
    if (std::abs(value.imag()) > kImagResidueTol * scale) {
      throw std::runtime_error("evaluate_wigner: imaginary residue " +
                               std::to_string(value.imag()) +
                               " exceeds tolerance; conjugate closure likely broken");
    }
    values.push_back(value.real());
  }
  return values;
}

double evaluate_wigner(const GaussianMixtureState& state, const Eigen::VectorXd& point) {
  return evaluate_wigner(state, std::span<const Eigen::VectorXd>(&point, 1))[0];
}

std::complex<double> evaluate_characteristic(const GaussianMixtureState& state,
                                             const Eigen::VectorXcd& alpha) {
  if (alpha.size() != state.n_modes) {
    throw std::invalid_argument("evaluate_characteristic: one displacement per mode required");
  }
  if (std::abs(state.trace() - 1.0) > kNormalizedTol) {
    throw std::invalid_argument("evaluate_characteristic: state must be normalized");
  }
  const int dim = 2 * state.n_modes;
  Eigen::VectorXd a(dim);
  for (int m = 0; m < state.n_modes; ++m) {
    a(2 * m) = alpha(m).real();
    a(2 * m + 1) = alpha(m).imag();
  }
  const Eigen::VectorXd oa = omega_matrix(state.n_modes) * a;
  const double quad = -(oa.dot(state.cov * oa)) / state.hbar;
  const double k = std::sqrt(2.0 / state.hbar);
  std::vector<std::complex<double>> terms(state.terms.size());
  for (std::size_t j = 0; j < state.terms.size(); ++j) {
    const std::complex<double> lin = oa.cast<std::complex<double>>().dot(state.terms[j].mean);
    terms[j] = state.terms[j].log_weight + quad + std::complex<double>(0.0, k) * lin;
  }
  return std::exp(log_sum_exp(terms));
}

bool is_conjugate_closed(const GaussianMixtureState& state, double tol) {
  const auto conj_match = [&](const GaussianTerm& a, const GaussianTerm& b) {
    if ((a.mean - b.mean.conjugate()).cwiseAbs().maxCoeff() > tol) {
      return false;
    }
    const std::complex<double> wa = a.log_weight;
    const std::complex<double> wb = std::conj(b.log_weight);
    // Phases compare modulo 2 pi.
    return std::abs(wa.real() - wb.real()) <= tol &&
           std::abs(std::remainder(wa.imag() - wb.imag(), 2.0 * std::numbers::pi)) <= tol;
  };
  for (const auto& t : state.terms) {
    bool found = false;
    for (const auto& u : state.terms) {
      if (conj_match(t, u)) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

}  // namespace catbreed

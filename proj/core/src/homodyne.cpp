#include "catbreed/homodyne.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "catbreed/logsum.hpp"

namespace catbreed {

namespace {

constexpr double kNormalizedTol = 1e-8;
constexpr double kNegativeTol = -1e-10;

void check_mode(const GaussianMixtureState& state, int mode) {
  if (mode < 0 || mode >= state.n_modes) {
    throw std::invalid_argument("homodyne: mode index out of range");
  }
}

void check_normalized(const GaussianMixtureState& state) {
  if (std::abs(state.trace() - 1.0) > kNormalizedTol) {
    throw std::invalid_argument("homodyne: state must be normalized");
  }
}

double p_variance(const GaussianMixtureState& state, int mode) {
  const double ap = state.cov(2 * mode + 1, 2 * mode + 1);
  if (!(ap > 0.0) || !std::isfinite(ap)) {
    throw std::runtime_error("homodyne: singular p-quadrature variance");
  }
  return ap;
}

/// Log-domain weights w_j - (a_jp - m)^2 / (2 A_p) - ln(2 pi A_p)/2 whose
/// exp-sum is P(m).
std::vector<std::complex<double>> conditioned_log_weights(const GaussianMixtureState& state,
                                                          int mode, double m, double ap) {
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi * ap);
  std::vector<std::complex<double>> ws(state.terms.size());
  for (std::size_t j = 0; j < state.terms.size(); ++j) {
    const std::complex<double> a_jp = state.terms[j].mean(2 * mode + 1);
    const std::complex<double> dev = a_jp - m;
    ws[j] = state.terms[j].log_weight - dev * dev / (2.0 * ap) - log_norm;
  }
  return ws;
}

}  // namespace

double homodyne_pdf(const GaussianMixtureState& state, int mode, double m) {
  check_mode(state, mode);
  check_normalized(state);
  const double ap = p_variance(state, mode);
  const auto ws = conditioned_log_weights(state, mode, m, ap);
  const std::complex<double> value = std::exp(log_sum_exp(ws));
  const double scale = std::max(1.0, std::abs(value.real()));
  if (std::abs(value.imag()) > 1e-10 * scale) {
    throw std::runtime_error("homodyne_pdf: imaginary residue beyond tolerance");
  }
  if (value.real() < kNegativeTol * scale) {
    throw std::runtime_error("homodyne_pdf: negative density " + std::to_string(value.real()) +
                             "; conjugate closure likely broken");
  }
  return std::max(0.0, value.real());
}

OutcomeRecord sample_homodyne(const GaussianMixtureState& state, int mode, Rng& rng) {
  check_mode(state, mode);
  check_normalized(state);
  const double ap = p_variance(state, mode);
  const double sigma = std::sqrt(ap);
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi * ap);

  const std::size_t n = state.terms.size();
  std::vector<double> peak_alpha(n);
  std::vector<double> env_log_coeff(n);
  bool phase_less = true;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> a_jp = state.terms[j].mean(2 * mode + 1);
    peak_alpha[j] = a_jp.real();
    const double beta = a_jp.imag();
    env_log_coeff[j] = state.terms[j].log_weight.real() + beta * beta / (2.0 * ap);
    if (std::abs(peak_alpha[j]) > 1e-12) {
      phase_less = false;
    }
  }
  // Discrete peak probabilities from the absolute coefficients.
  std::vector<double> peak_weight(n);
  const double log_m = log_sum_exp(std::span<const double>(env_log_coeff));
  for (std::size_t j = 0; j < n; ++j) {
    peak_weight[j] = std::exp(env_log_coeff[j] - log_m);
  }

  const auto log_envelope = [&](double m) {
    std::vector<double> ts(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double dev = peak_alpha[j] - m;
      ts[j] = env_log_coeff[j] - dev * dev / (2.0 * ap) - log_norm;
    }
    return log_sum_exp(std::span<const double>(ts));
  };

  for (int attempt = 1; attempt <= kMaxRejectionAttempts; ++attempt) {
    double m;
    if (phase_less) {
      m = sigma * rng.normal();
    } else {
      const std::size_t j = rng.discrete(peak_weight);
      m = peak_alpha[j] + sigma * rng.normal();
    }
    const double density = homodyne_pdf(state, mode, m);
    const double log_p = std::log(density);
    const double log_g = log_envelope(m);
    const double u = rng.uniform();
    if (std::log(u) <= log_p - log_g) {
      return {m, density, attempt};
    }
  }
  throw std::runtime_error("sample_homodyne: rejection cap exceeded (envelope bug?)");
}

Conditioned condition_on_outcome(const GaussianMixtureState& state, int mode, double m) {
  check_mode(state, mode);
  if (state.n_modes < 2) {
    throw std::invalid_argument("condition_on_outcome: state needs at least 2 modes");
  }
  const double ap = p_variance(state, mode);
  const int dim = 2 * state.n_modes;
  const int out_dim = dim - 2;

  std::vector<int> rest;
  rest.reserve(out_dim);
  for (int i = 0; i < dim; ++i) {
    if (i != 2 * mode && i != 2 * mode + 1) {
      rest.push_back(i);
    }
  }

  // Cross-covariance column between the measured p quadrature and the rest.
  Eigen::VectorXd cross(out_dim);
  for (int i = 0; i < out_dim; ++i) {
    cross(i) = state.cov(rest[i], 2 * mode + 1);
  }
  Eigen::MatrixXd cov_out(out_dim, out_dim);
  for (int i = 0; i < out_dim; ++i) {
    for (int k = 0; k < out_dim; ++k) {
      cov_out(i, k) = state.cov(rest[i], rest[k]) - cross(i) * cross(k) / ap;
    }
  }

  const auto ws = conditioned_log_weights(state, mode, m, ap);
  const Eigen::VectorXcd crossc = cross.cast<std::complex<double>>();

  GaussianMixtureState out;
  out.n_modes = state.n_modes - 1;
  out.hbar = state.hbar;
  out.cov = std::move(cov_out);
  out.terms.resize(state.terms.size());
  for (std::size_t j = 0; j < state.terms.size(); ++j) {
    const std::complex<double> a_jp = state.terms[j].mean(2 * mode + 1);
    GaussianTerm& t = out.terms[j];
    t.log_weight = ws[j];
    t.mean.resize(out_dim);
    for (int i = 0; i < out_dim; ++i) {
      t.mean(i) = state.terms[j].mean(rest[i]);
    }
    t.mean += ((m - a_jp) / ap) * crossc;
  }

  const std::complex<double> log_trace = log_sum_exp(ws);
  if (!std::isfinite(log_trace.real())) {
    throw std::runtime_error("condition_on_outcome: outcome density vanished");
  }
  if (std::abs(std::remainder(log_trace.imag(), 2.0 * std::numbers::pi)) > 1e-8) {
    throw std::runtime_error("condition_on_outcome: density not real positive");
  }
  return {normalize(out), log_trace.real()};
}

}  // namespace catbreed

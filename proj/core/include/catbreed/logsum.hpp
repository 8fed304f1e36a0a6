#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace catbreed {

/// Stable ln(sum(exp(t_j))) for complex log-domain values.
///
/// The largest real part is factored out before exponentiating, so shifts of
/// order 1e4 in either direction neither overflow nor underflow. A single
/// term is returned exactly. If every term has real part -inf (or the sum
/// cancels to zero) the result has real part -inf.
inline std::complex<double> log_sum_exp(std::span<const std::complex<double>> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  if (terms.size() == 1) {
    return terms[0];
  }
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    shift = std::max(shift, t.real());
  }
  if (std::isinf(shift) && shift < 0) {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }
  std::complex<double> acc = 0.0;
  for (const auto& t : terms) {
    acc += std::exp(t - shift);
  }
  if (acc == std::complex<double>(0.0, 0.0)) {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }
  return shift + std::log(acc);
}

inline std::complex<double> log_sum_exp(const std::vector<std::complex<double>>& terms) {
  return log_sum_exp(std::span<const std::complex<double>>(terms));
}

/// Real-argument overload; result is the real log of a positive sum.
inline double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  double shift = -std::numeric_limits<double>::infinity();
  for (double t : terms) {
    shift = std::max(shift, t);
  }
  if (std::isinf(shift) && shift < 0) {
    return shift;
  }
  double acc = 0.0;
  for (double t : terms) {
    acc += std::exp(t - shift);
  }
  return shift + std::log(acc);
}

}  // namespace catbreed

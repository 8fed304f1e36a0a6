#include "catbreed/gkp_metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catbreed {

namespace {
constexpr double kUnphysicalTol = 1e-12;
}

std::string lattice_name(Lattice lattice) {
  switch (lattice) {
    case Lattice::kSquareLogical:
      return "logical-square";
    case Lattice::kQunaught:
      return "qunaught";
    case Lattice::kHexLogical:
      return "hex-logical";
    case Lattice::kHexQunaught:
      return "hex-qunaught";
  }
  throw std::invalid_argument("unknown lattice");
}

Lattice lattice_from_name(const std::string& name) {
  if (name == "logical-square") return Lattice::kSquareLogical;
  if (name == "qunaught") return Lattice::kQunaught;
  if (name == "hex-logical") return Lattice::kHexLogical;
  if (name == "hex-qunaught") return Lattice::kHexQunaught;
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

LatticeSpec stabilizer_displacements(Lattice lattice) {
  const double pi = std::numbers::pi;
  const double q = std::pow(3.0, 0.25);
  const double kp = 1.0 / q + q;
  const double km = 1.0 / q - q;
  switch (lattice) {
    case Lattice::kSquareLogical:
      return {lattice, std::sqrt(2.0 * pi), {0.0, std::sqrt(2.0 * pi)}};
    case Lattice::kQunaught:
      return {lattice, std::sqrt(pi), {0.0, std::sqrt(pi)}};
    case Lattice::kHexLogical:
      return {lattice,
              std::sqrt(pi / 2.0) * std::complex<double>(kp, km),
              std::sqrt(pi / 2.0) * std::complex<double>(km, kp)};
    case Lattice::kHexQunaught:
      return {lattice,
              0.5 * std::sqrt(pi) * std::complex<double>(kp, km),
              0.5 * std::sqrt(pi) * std::complex<double>(km, kp)};
  }
  throw std::invalid_argument("unknown lattice");
}

double effective_squeezing(const GaussianMixtureState& state, std::complex<double> stab) {
  if (state.n_modes != 1) {
    throw std::invalid_argument("effective_squeezing expects a single-mode state");
  }
  Eigen::VectorXcd alpha(1);
  alpha(0) = stab;
  const double mag = std::abs(evaluate_characteristic(state, alpha));
  if (mag >= 1.0 + kUnphysicalTol) {
    throw std::runtime_error("effective_squeezing: |<D>| >= 1 (unphysical state)");
  }
  if (mag == 0.0) {
    throw std::runtime_error("effective_squeezing: <D> vanished, Delta undefined");
  }
  const double clamped = std::min(mag, 1.0);
  return std::sqrt(-2.0 / std::norm(stab) * std::log(clamped));
}

double to_db(double delta) { return -10.0 * std::log10(delta * delta); }

double from_db(double db) { return std::pow(10.0, -db / 20.0); }

MetricBundle metric_bundle(const GaussianMixtureState& state, Lattice lattice) {
  const LatticeSpec spec = stabilizer_displacements(lattice);
  MetricBundle b;
  b.delta_x = effective_squeezing(state, spec.beta_stab);
  b.delta_p = effective_squeezing(state, spec.alpha_stab);
  b.delta_sym = std::sqrt((b.delta_x * b.delta_x + b.delta_p * b.delta_p) / 2.0);
  b.delta_x_db = to_db(b.delta_x);
  b.delta_p_db = to_db(b.delta_p);
  b.delta_sym_db = to_db(b.delta_sym);
  return b;
}

bool success_indicator(const MetricBundle& sample, const MetricBundle& reference) {
  return sample.delta_p <= reference.delta_p;
}

}  // namespace catbreed

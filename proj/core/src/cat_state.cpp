#include "catbreed/cat_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace catbreed {

GaussianMixtureState squeezed_cat(const CatSpec& spec, double hbar) {
  if (!(spec.alpha >= 0.0)) {
    throw std::invalid_argument("cat amplitude must be >= 0");
  }
  if (spec.parity != 0 && spec.parity != 1) {
    throw std::invalid_argument("cat parity must be 0 or 1");
  }
  if (!(spec.eta > 0.0 && spec.eta <= 1.0)) {
    throw std::invalid_argument("cat loss transmissivity must be in (0, 1]");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be > 0");
  }
  const double mu = std::sqrt(2.0 * hbar) * spec.alpha * std::exp(-spec.r);
  const double mu_z = std::sqrt(2.0 * hbar) * spec.alpha * std::exp(spec.r);
  const std::complex<double> cross_weight(-2.0 * spec.alpha * spec.alpha,
                                          std::numbers::pi * spec.parity);

  std::vector<GaussianTerm> terms(4);
  for (auto& t : terms) {
    t.mean = Eigen::VectorXcd::Zero(2);
  }
  terms[0].log_weight = 0.0;
  terms[0].mean(0) = mu;
  terms[1].log_weight = cross_weight;
  terms[1].mean(1) = std::complex<double>(0.0, mu_z);
  terms[2].log_weight = cross_weight;
  terms[2].mean(1) = std::complex<double>(0.0, -mu_z);
  terms[3].log_weight = 0.0;
  terms[3].mean(0) = -mu;

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2, 2);
  cov(0, 0) = (hbar / 2.0) * std::exp(-2.0 * spec.r);
  cov(1, 1) = (hbar / 2.0) * std::exp(2.0 * spec.r);

  GaussianMixtureState state{1, hbar, std::move(terms), std::move(cov)};
  return normalize(apply_loss(state, spec.eta));
}

double amplitude_for_target(int n_cats, Lattice lattice, double r, double hbar) {
  if (n_cats < 1) {
    throw std::invalid_argument("n_cats must be >= 1");
  }
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be > 0");
  }
  const double pi = std::numbers::pi;
  double mu_target = 0.0;
  switch (lattice) {
    case Lattice::kSquareLogical:
    case Lattice::kHexLogical:
      mu_target = std::sqrt(n_cats * pi * hbar);
      break;
    case Lattice::kQunaught:
    case Lattice::kHexQunaught:
      mu_target = std::sqrt(n_cats * pi * hbar / 2.0);
      break;
    default:
      throw std::invalid_argument("unknown lattice");
  }
  return mu_target * std::exp(r) / std::sqrt(2.0 * hbar);
}

}  // namespace catbreed

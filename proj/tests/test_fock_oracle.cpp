#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "catbreed/breeding.hpp"
#include "catbreed/fock_oracle.hpp"
#include "catbreed/homodyne.hpp"

using namespace catbreed;
using cd = std::complex<double>;
namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXd point2(double x, double p) {
  Eigen::VectorXd q(2);
  q << x, p;
  return q;
}

/// Phase-space sample points spread over the peak/fringe region.
std::vector<std::pair<double, double>> sample_grid(double lim, int per_axis) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      pts.emplace_back(-lim + 2.0 * lim * i / (per_axis - 1),
                       -lim + 2.0 * lim * j / (per_axis - 1));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("alpha = 0 even cat is the vacuum projector") {
  const auto rho = cat_density_fock({0.0, 0.0, 0, 1.0}, 30);
  CHECK(std::abs(rho.matrix(0, 0) - 1.0) < 1e-12);
  CHECK(rho.matrix.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("even cat populates only even photon numbers") {
  const auto rho = cat_density_fock({1.5, 0.0, 0, 1.0}, 40);
  for (int n = 1; n < 40; n += 2) {
    CHECK(std::abs(rho.matrix(n, n)) < 1e-14);
  }
  const auto odd = cat_density_fock({1.5, 0.0, 1, 1.0}, 40);
  for (int n = 0; n < 40; n += 2) {
    CHECK(std::abs(odd.matrix(n, n)) < 1e-14);
  }
}

TEST_CASE("displacement matrix is unitary with the vacuum overlap") {
  const cd beta(0.4, -0.9);
  const auto d = displacement_matrix_fock(beta, 40);
  CHECK((d * d.adjoint() - Eigen::MatrixXcd::Identity(40, 40)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(d(0, 0) - std::exp(-0.5 * std::norm(beta))) < 1e-12);
}

TEST_CASE("vacuum effective squeezing is 1") {
  FockDensity rho{30, 2.0, Eigen::MatrixXcd::Zero(30, 30)};
  rho.matrix(0, 0) = 1.0;
  CHECK(std::abs(effective_squeezing_fock(rho, cd(0.0, std::sqrt(kPi))) - 1.0) < 1e-10);
}

TEST_CASE("squeezed vacuum Wigner agrees between representations") {
  // pins the sign convention of the squeeze recursion
  const auto rho = cat_density_fock({0.0, 0.3, 0, 1.0}, 50);
  const auto lcg = reduce_equal_means(squeezed_cat({0.0, 0.3, 0, 1.0}, 2.0));
  for (auto [x, p] : sample_grid(2.5, 7)) {
    CHECK(std::abs(wigner_fock(rho, x, p) - evaluate_wigner(lcg, point2(x, p))) < 1e-8);
  }
}

TEST_CASE("lossy cat Wigner matches the Gaussian mixture at 100 points") {
  const CatSpec spec{1.5, 0.3, 0, 0.95};
  const auto rho = cat_density_fock(spec, 60);
  const auto lcg = squeezed_cat(spec, 2.0);
  double max_dev = 0.0;
  for (auto [x, p] : sample_grid(4.5, 10)) {
    max_dev = std::max(max_dev,
                       std::abs(wigner_fock(rho, x, p) - evaluate_wigner(lcg, point2(x, p))));
  }
  CHECK(max_dev < 1e-6);
}

TEST_CASE("two-cat breeding agrees with the Gaussian pipeline") {
  const CatSpec spec{1.5, 0.3, 0, 1.0};
  const double m = 0.4;
  const auto fock = breed_fock({spec, spec}, {m}, 60);

  const auto cat = squeezed_cat(spec, 2.0);
  const auto step = breed_step(cat, cat, 1, m, nullptr);
  const auto two = apply_symplectic(tensor(cat, cat), cascade_step_splitter(1));

  SUBCASE("outcome density") {
    CHECK(std::abs(fock.densities[0] - homodyne_pdf(two, 0, m)) < 1e-6);
  }
  SUBCASE("Wigner pointwise") {
    double max_dev = 0.0;
    for (auto [x, p] : sample_grid(5.0, 10)) {
      max_dev = std::max(max_dev, std::abs(wigner_fock(fock.rho, x, p) -
                                           evaluate_wigner(step.state, point2(x, p))));
    }
    CHECK(max_dev < 1e-5);
  }
}

TEST_CASE("lossy effective squeezing agrees within 1e-4") {
  const CatSpec spec{1.2, 0.4, 0, 0.9};
  const auto rho = cat_density_fock(spec, 60);
  const auto lcg = squeezed_cat(spec, 2.0);
  for (cd beta : {cd(std::sqrt(kPi), 0.0), cd(0.0, std::sqrt(kPi))}) {
    CHECK(std::abs(effective_squeezing_fock(rho, beta) - effective_squeezing(lcg, beta)) <
          1e-4);
  }
}

TEST_CASE("zero-amplitude cats breed to the squeezed vacuum for any outcome") {
  const CatSpec spec{0.0, 0.25, 0, 1.0};
  for (double m : {0.0, 0.6}) {
    const auto fock = breed_fock({spec, spec}, {m}, 40);
    const auto expected = cat_density_fock(spec, 40);
    CHECK((fock.rho.matrix - expected.matrix).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("insufficient cutoff fails the tail check") {
  CHECK_THROWS_AS(cat_density_fock({2.0, 0.3, 0, 1.0}, 5), std::runtime_error);
  CHECK_NOTHROW(cat_density_fock({2.0, 0.3, 0, 1.0}, 60));
}

TEST_CASE("breed_fock argument validation") {
  const CatSpec spec{1.0, 0.0, 0, 1.0};
  CHECK_THROWS_AS(breed_fock({spec}, {}, 40), std::invalid_argument);
  CHECK_THROWS_AS(breed_fock({spec, spec, spec, spec}, {0.0, 0.0, 0.0}, 40),
                  std::invalid_argument);
  CHECK_THROWS_AS(breed_fock({spec, spec}, {0.0, 0.0}, 40), std::invalid_argument);
}

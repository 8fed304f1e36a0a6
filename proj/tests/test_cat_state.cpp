#include <cmath>
#include <numbers>

#include <doctest.h>

#include "catbreed/breeding.hpp"
#include "catbreed/cat_state.hpp"

using namespace catbreed;
namespace {
constexpr double kPi = std::numbers::pi;
const double kR12dB = 12.0 * std::numbers::ln10 / 20.0;  // e^{-2r} = 10^{-1.2}
}  // namespace

TEST_CASE("four-Gaussian structure of the lossless cat") {
  const double alpha = 1.4, r = 0.3, hbar = 2.0;
  const auto cat = squeezed_cat({alpha, r, 0, 1.0}, hbar);
  REQUIRE(cat.n_terms() == 4);
  const double mu = std::sqrt(2.0 * hbar) * alpha * std::exp(-r);
  const double mu_z = std::sqrt(2.0 * hbar) * alpha * std::exp(r);
  CHECK(cat.terms[0].mean(0).real() == doctest::Approx(mu));
  CHECK(cat.terms[3].mean(0).real() == doctest::Approx(-mu));
  CHECK(cat.terms[1].mean(1).imag() == doctest::Approx(mu_z));
  CHECK(cat.terms[2].mean(1).imag() == doctest::Approx(-mu_z));
  CHECK(cat.cov(0, 0) == doctest::Approx(std::exp(-2.0 * r)));
  CHECK(cat.cov(1, 1) == doctest::Approx(std::exp(2.0 * r)));
  // outer weights equal, fringe weights carry -2 alpha^2 relative to them
  CHECK(cat.terms[1].log_weight.real() - cat.terms[0].log_weight.real() ==
        doctest::Approx(-2.0 * alpha * alpha).epsilon(1e-12));
  CHECK(std::abs(cat.trace() - 1.0) < 1e-12);
}

TEST_CASE("zero-amplitude even cat reduces to the squeezed vacuum") {
  const auto cat = reduce_equal_means(squeezed_cat({0.0, 0.25, 0, 1.0}, 2.0));
  CHECK(cat.n_terms() == 1);
  CHECK(std::abs(cat.terms[0].mean(0)) == 0.0);
  CHECK(cat.cov(0, 0) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("qunaught target amplitude for nine -12 dB cats") {
  const double alpha = amplitude_for_target(9, Lattice::kQunaught, kR12dB, 2.0);
  CHECK(alpha == doctest::Approx(0.5 * std::exp(kR12dB) * std::sqrt(9.0 * kPi)).epsilon(1e-14));
  CHECK(alpha == doctest::Approx(10.58).epsilon(5e-4));
  const auto cat = squeezed_cat({alpha, kR12dB, 0, 1.0}, 2.0);
  // fringe weight real part is -2 alpha^2 (about -224 for this alpha)
  CHECK(cat.terms[1].log_weight.real() - cat.terms[0].log_weight.real() ==
        doctest::Approx(-2.0 * alpha * alpha).epsilon(1e-12));
  CHECK(-2.0 * alpha * alpha == doctest::Approx(-224.0).epsilon(1e-3));
}

TEST_CASE("parity flips the fringe sign through an i pi log-weight") {
  const auto odd = squeezed_cat({1.0, 0.0, 1, 1.0}, 2.0);
  CHECK(odd.terms[1].log_weight.imag() == doctest::Approx(kPi));
  CHECK(odd.terms[2].log_weight.imag() == doctest::Approx(kPi));
  CHECK(odd.terms[0].log_weight.imag() == doctest::Approx(0.0));
}

TEST_CASE("amplitude ratios and small cases") {
  const double r = 0.21;
  CHECK(amplitude_for_target(5, Lattice::kSquareLogical, r) /
            amplitude_for_target(5, Lattice::kQunaught, r) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(amplitude_for_target(1, Lattice::kQunaught, 0.0) ==
        doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));
  // hex variants share the pre-hex spacing
  CHECK(amplitude_for_target(4, Lattice::kHexQunaught, r) ==
        amplitude_for_target(4, Lattice::kQunaught, r));
  CHECK(amplitude_for_target(4, Lattice::kHexLogical, r) ==
        amplitude_for_target(4, Lattice::kSquareLogical, r));
}

TEST_CASE("invalid specs rejected") {
  CHECK_THROWS_AS(squeezed_cat({-0.5, 0.0, 0, 1.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(squeezed_cat({1.0, 0.0, 2, 1.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(squeezed_cat({1.0, 0.0, 0, 0.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(squeezed_cat({1.0, 0.0, 0, 1.2}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_for_target(0, Lattice::kQunaught, 0.1), std::invalid_argument);
}

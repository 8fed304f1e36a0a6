#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "catbreed/logsum.hpp"

using catbreed::log_sum_exp;
using cd = std::complex<double>;

TEST_CASE("two equal zeros give ln 2") {
  std::vector<cd> ts{cd(0.0), cd(0.0)};
  CHECK(log_sum_exp(ts).real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(log_sum_exp(ts).imag() == doctest::Approx(0.0));
}

TEST_CASE("deep shift does not underflow") {
  std::vector<cd> ts{cd(-1000.0), cd(-1000.0)};
  const cd r = log_sum_exp(ts);
  CHECK(std::isfinite(r.real()));
  CHECK(r.real() == doctest::Approx(-1000.0 + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("shifts of 1e4 in both directions stay finite") {
  std::vector<cd> up{cd(1e4), cd(1e4 - 3.0)};
  std::vector<cd> down{cd(-1e4), cd(-1e4 - 3.0)};
  CHECK(log_sum_exp(up).real() == doctest::Approx(1e4 + std::log1p(std::exp(-3.0))));
  CHECK(log_sum_exp(down).real() == doctest::Approx(-1e4 + std::log1p(std::exp(-3.0))));
}

TEST_CASE("conjugate pair sums to a real value") {
  const cd w(-2.5, 0.7);
  std::vector<cd> ts{w, std::conj(w)};
  CHECK(std::abs(log_sum_exp(ts).imag()) < 1e-14);
}

TEST_CASE("single term is exact") {
  std::vector<cd> ts{cd(-123.456, 0.789)};
  CHECK(log_sum_exp(ts) == ts[0]);
}

TEST_CASE("empty input throws") {
  std::vector<cd> ts;
  CHECK_THROWS_AS(log_sum_exp(ts), std::invalid_argument);
}

TEST_CASE("opposite phases cancel far below the inputs") {
  std::vector<cd> ts{cd(1.0, 0.0), cd(1.0, std::numbers::pi)};
  CHECK(log_sum_exp(ts).real() < 1.0 - 30.0);  // suppressed to rounding noise
}

TEST_CASE("all minus-infinity inputs give minus infinity") {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<cd> ts{cd(-inf, 0.0), cd(-inf, 0.0)};
  CHECK(std::isinf(log_sum_exp(ts).real()));
  CHECK(log_sum_exp(ts).real() < 0);
}

TEST_CASE("real overload matches complex one") {
  std::vector<double> ts{-3.0, -1.0, -2.0};
  std::vector<cd> tsc{cd(-3.0), cd(-1.0), cd(-2.0)};
  CHECK(log_sum_exp(std::span<const double>(ts)) ==
        doctest::Approx(log_sum_exp(tsc).real()).epsilon(1e-15));
}

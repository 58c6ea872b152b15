#include <doctest.h>

#include <cmath>

#include "bern/quadrature.hpp"
#include "bern/weights.hpp"

using bern::RadialWeight;

TEST_CASE("power weight evaluation") {
  auto w0 = RadialWeight::power(0.0);
  auto w1 = RadialWeight::power(1.0);
  CHECK(w0(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w1(0.5) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(RadialWeight::power(2.0)(1.0 - 1e-8) < 1e-14);
  CHECK_THROWS(RadialWeight::power(-1.0));
  CHECK_THROWS(RadialWeight::power(51.0));
  CHECK_THROWS(w0(0.0));
  CHECK_THROWS(w0(1.0));
}

TEST_CASE("custom weight contract") {
  CHECK_THROWS(RadialWeight::custom([](double rho) { return rho - 0.5; }));
  auto w = RadialWeight::custom([](double) { return 1.0; });
  CHECK(w(0.3) == doctest::Approx(1.0));
}

TEST_CASE("power weight moments are exact") {
  auto w0 = RadialWeight::power(0.0);
  for (int k = 0; k <= 10; ++k)
    CHECK(w0.moment(2.0 * k) == doctest::Approx(1.0 / (2.0 * k + 2.0)).epsilon(1e-14));
  auto w1 = RadialWeight::power(1.0);
  CHECK(w1.moment(0.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("moments decay monotonically and are log-convex") {
  for (double beta : {-0.5, 0.0, 2.0}) {
    auto w = RadialWeight::power(beta);
    double prev = w.moment(0.0);
    for (double s = 1.0; s <= 40.0; s += 1.0) {
      double cur = w.moment(s);
      CHECK(cur < prev);
      prev = cur;
    }
    for (double s = 1.0; s <= 30.0; s += 1.0) {
      double mid = w.moment(s);
      CHECK(mid * mid <= w.moment(s - 0.5) * w.moment(s + 0.5) * (1.0 + 1e-10));
    }
  }
}

TEST_CASE("power and custom moment paths agree") {
  for (double beta : {-0.5, 0.0, 1.5}) {
    auto exact = RadialWeight::power(beta);
    auto numeric = RadialWeight::custom(
        [beta](double rho) { return std::pow(1.0 - rho * rho, beta) * rho; });
    for (double s : {0.0, 2.0, 8.0})
      CHECK(numeric.moment(s) == doctest::Approx(exact.moment(s)).epsilon(1e-8));
  }
}

TEST_CASE("growth validation") {
  // (1-rho)^{-(beta+1)} w_beta(rho) = (1+rho)^beta rho / (1-rho) is increasing
  for (double beta : {0.0, 1.0, 3.0})
    CHECK(bern::validate_growth(RadialWeight::power(beta), beta + 1.0, 0.0).ok);
  auto flat = RadialWeight::custom([](double) { return 1.0; });
  CHECK(bern::validate_growth(flat, 0.5, 0.0).ok);
  auto fast = RadialWeight::custom([](double rho) { return std::exp(-1.0 / (1.0 - rho)); });
  auto check = bern::validate_growth(fast, 1.0, 0.0);
  CHECK_FALSE(check.ok);
  CHECK(check.violation_rho > 0.0);
}

#include <doctest.h>

#include <cmath>

#include "bern/kernel_integrals.hpp"

TEST_CASE("I at the trivial corners") {
  CHECK(bern::I_quadrature(3.7, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(bern::I_series(0.0, 0.5) == doctest::Approx(1.0));
  CHECK_THROWS(bern::I_quadrature(2.0, 1.0));
  CHECK_THROWS(bern::I_series(-1.0, 0.5));
}

TEST_CASE("I closed forms") {
  for (double r : {0.1, 0.5, 0.9}) {
    double x = r * r;
    CHECK(bern::I_series(2.0, r) == doctest::Approx(1.0 / (1.0 - x)).epsilon(1e-12));
    double i4 = (1.0 + x) / std::pow(1.0 - x, 3.0);
    CHECK(bern::I_series(4.0, r) == doctest::Approx(i4).epsilon(1e-12));
    CHECK(bern::I_quadrature(4.0, r) == doctest::Approx(i4).epsilon(1e-10));
  }
}

TEST_CASE("I series brute-force cross-check") {
  // sum (k+1)^2 r^{2k} summed directly
  double r = 0.6, x = r * r;
  double direct = 0.0, p = 1.0;
  for (int k = 0; k < 2000; ++k) {
    direct += (k + 1.0) * (k + 1.0) * p;
    p *= x;
  }
  CHECK(bern::I_series(4.0, r) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("phi basics") {
  CHECK(bern::phi(0.5, 0.0) == doctest::Approx(1.0));
  CHECK(bern::phi(0.0, 7.3) == doctest::Approx(1.0));
  for (double r : {0.2, 0.8})
    CHECK(bern::phi(r, 2.0) == doctest::Approx(1.0 + r * r).epsilon(1e-12));
}

TEST_CASE("psi vanishes identically") {
  CHECK(bern::psi(0.0) == 0.0);
  CHECK(std::abs(bern::psi(0.5)) < 1e-9);
  for (double r : {0.3, 0.7, 0.9})
    CHECK(std::abs(2.0 * bern::psi(r) - bern::psi(r * r)) < 1e-9);
}

TEST_CASE("identity route") {
  for (double r : {0.0, 0.3, 0.7, 0.95}) {
    CHECK(bern::I_identity(2.0, r) ==
          doctest::Approx(1.0 / (1.0 - r * r)).epsilon(1e-11));
    for (double t : {3.0, 4.5, 10.0, 40.0}) {
      double ii = bern::I_identity(t, r);
      double iq = bern::I_quadrature(t, r, 1e-10);
      CHECK(std::abs(ii - iq) / iq < 1e-8);
    }
  }
  CHECK_THROWS(bern::I_identity(1.5, 0.3));
}

TEST_CASE("lemma2 tail integral") {
  auto w0 = bern::RadialWeight::power(0.0);
  // t = 0 collapses to the plain moment: integral rho^2 drho = 1/3
  CHECK(bern::lemma2_tail(w0, 0.0, 0.0, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  // monotone in the lower endpoint
  double t8_02 = bern::lemma2_tail(w0, 8.0, 0.2, 0.7);
  double t8_05 = bern::lemma2_tail(w0, 8.0, 0.5, 0.7);
  CHECK(t8_02 >= t8_05);
}

TEST_CASE("lemma2 ratio") {
  auto w1 = bern::RadialWeight::power(1.0);
  CHECK(bern::lemma2_ratio(w1, 2.0, 0.5, 10.0, 0.5) == doctest::Approx(1.0).epsilon(1e-9));
  double v = bern::lemma2_ratio(w1, 2.0, 0.5, 10.0, 0.8);
  CHECK(v >= 1.0);
  CHECK_THROWS(bern::lemma2_ratio(w1, 2.0, 0.5, 3.5, 0.8));  // t - gamma <= 2
  CHECK_THROWS(bern::lemma2_ratio(w1, 2.0, 0.5, 10.0, 0.3));  // r < r0
  auto fast = bern::RadialWeight::custom(
      [](double rho) { return std::exp(-1.0 / (1.0 - rho)); });
  CHECK_THROWS(bern::lemma2_ratio(fast, 1.0, 0.0, 10.0, 0.5));  // growth hypothesis
}

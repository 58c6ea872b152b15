#include <doctest.h>

#include <cmath>
#include <complex>

#include "bern/quadrature.hpp"
#include "bern/rational.hpp"

using bern::Complex;

TEST_CASE("circle rule normalization and geometric integrand") {
  CHECK(bern::integrate_circle([](Complex) { return 1.0; }, 64) == doctest::Approx(1.0));
  // |1 - 0.5 zeta|^{-2} integrates to 1/(1 - 0.25)
  double v = bern::integrate_circle(
      [](Complex zeta) { return 1.0 / std::norm(1.0 - 0.5 * zeta); }, 256);
  CHECK(v == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("circle rule kills pure oscillations below the Nyquist degree") {
  for (int k : {1, 5, 31, 100}) {
    double re = bern::integrate_circle(
        [k](Complex zeta) { return std::pow(zeta, k).real(); }, 256);
    double im = bern::integrate_circle(
        [k](Complex zeta) { return std::pow(zeta, k).imag(); }, 256);
    CHECK(std::abs(re) < 1e-14);
    CHECK(std::abs(im) < 1e-14);
  }
}

TEST_CASE("radial Gauss-Legendre") {
  auto res = bern::integrate_radial([](double rho) { return rho; },
                                    bern::GaussLegendreRule{}, 0.0, 1e-12);
  CHECK(res.value == doctest::Approx(0.5).epsilon(1e-13));
  auto res2 = bern::integrate_radial(
      [](double rho) { return (1.0 - rho * rho) * rho; }, bern::GaussLegendreRule{},
      0.0, 1e-12);
  CHECK(res2.value == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("Gauss-Jacobi handles the endpoint singularity") {
  auto res = bern::integrate_radial(
      [](double rho) { return std::pow(1.0 - rho, -0.5); },
      bern::GaussJacobiRule{-0.5, 32}, 0.0, 1e-12);
  CHECK(res.value == doctest::Approx(2.0).epsilon(1e-12));
  // smooth modulation
  auto res2 = bern::integrate_radial(
      [](double rho) { return std::pow(1.0 - rho, -0.5) * std::cos(rho); },
      bern::GaussJacobiRule{-0.5, 32}, 0.0, 1e-12);
  // oracle: substitute u = sqrt(1-rho) and integrate 2 cos(1-u^2) densely
  CHECK(res2.value == doctest::Approx(1.499596609713972).epsilon(1e-10));
}

TEST_CASE("annulus integration") {
  auto w0 = bern::RadialWeight::power(0.0);
  bern::QuadratureSpec spec;
  auto one = [](Complex) { return 1.0; };
  CHECK(bern::integrate_annulus(one, w0, spec).value ==
        doctest::Approx(0.5).epsilon(1e-11));
  CHECK(bern::integrate_annulus([](Complex z) { return std::norm(z); }, w0, spec)
            .value == doctest::Approx(0.25).epsilon(1e-11));
  spec.annulus_alpha = 0.5;
  CHECK(bern::integrate_annulus(one, w0, spec).value ==
        doctest::Approx(0.375).epsilon(1e-11));
}

TEST_CASE("angular exactness on truncated Taylor expansions") {
  auto f = bern::RationalFunction::simple_pole({1.0, 0.0}, {1.0 / 0.6, 0.0});
  int D = 40;
  auto c = f.taylor_coeffs(D);
  std::vector<bern::Complex> cs(c.begin(), c.end());
  auto p = bern::RationalFunction::polynomial(std::move(cs));
  double parseval = 0.0;
  for (const auto& a : c) parseval += std::norm(a);
  double quad = bern::integrate_circle(
      [&](Complex zeta) { return std::norm(p.eval(zeta)); }, 128);  // N > 2D
  CHECK(quad == doctest::Approx(parseval).epsilon(1e-12));
}

TEST_CASE("spec validation") {
  bern::QuadratureSpec spec;
  spec.angular_points = 100;  // not a power of two
  CHECK_THROWS(bern::validate(spec));
  spec.angular_points = 1024;
  spec.tolerance = 0.0;
  CHECK_THROWS(bern::validate(spec));
  spec.tolerance = 1e-10;
  spec.annulus_alpha = 1.0;
  CHECK_THROWS(bern::validate(spec));
}

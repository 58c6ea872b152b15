#include "bern/kernel_integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bern {

namespace {

void check_tr(double t, double r) {
  if (!(t >= 0.0)) throw std::domain_error("kernel integral: t < 0");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("kernel integral: r outside [0,1)");
}

}  // namespace

double I_quadrature(double t, double r, double tol) {
  check_tr(t, r);
  auto res = integrate_circle_adaptive(
      [t, r](Complex zeta) { return std::pow(std::abs(1.0 - r * zeta), -t); },
      1024, tol);
  return res.value;
}

double I_series(double t, double r, double tail_tol) {
  check_tr(t, r);
  if (t == 0.0 || r == 0.0) return 1.0;
  const double x = r * r;
  // term_k = a_k(t)^2 r^{2k}, a_{k+1} = a_k (k + t/2)/(k + 1).
  // Multiplicative update keeps a_k^2 from overflowing before x^k damps it.
  double term = 1.0;
  double sum = 1.0;
  const long kmax = 20000000;
  for (long k = 0; k < kmax; ++k) {
    double ratio = (k + t / 2.0) / (k + 1.0);
    term *= ratio * ratio * x;
    sum += term;
    if (term <= 0.01 * tail_tol * sum * (1.0 - x) && 2.0 * k > t) {
      // geometric tail bound: remaining terms < term * x / (1 - x) once the
      // coefficient ratio has dropped below 1
      return sum;
    }
  }
  throw std::runtime_error("I_series did not converge");
}

double phi(double r, double t, double tol) {
  check_tr(t, r);
  auto res = integrate_circle_adaptive(
      [t, r](Complex z) { return std::pow(std::abs(1.0 + r * z), t); }, 1024,
      tol);
  return res.value;
}

double psi(double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("psi: r outside [0,1)");
  if (r == 0.0) return 0.0;
  // The integrand extends to an even 2pi-periodic function, so the integral
  // over (0, pi) is half the full-period trapezoid sum, which converges
  // spectrally.
  int N = 2048;
  auto full = [r](int n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      double th = 2.0 * std::numbers::pi * j / n;
      s += std::log(1.0 + r * r - 2.0 * r * std::cos(th));
    }
    return std::numbers::pi * s / n;  // (1/2) * (2 pi / n) * sum
  };
  double prev = full(N);
  while (N < (1 << 21)) {
    N *= 2;
    double cur = full(N);
    if (std::abs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  return prev;
}

double I_identity(double t, double r) {
  if (!(t >= 2.0)) throw std::domain_error("I_identity: valid only for t >= 2");
  check_tr(t, r);
  return std::pow(1.0 - r * r, 1.0 - t) * phi(r, t - 2.0);
}

double lemma2_tail(const RadialWeight& w, double t, double a, double r,
                   double tol) {
  check_tr(t, r);
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("lemma2_tail: a outside [0,1)");
  auto res = integrate_radial(
      [&w, t, r](double rho) { return rho * w(rho) * I_series(t, r * rho); },
      GaussLegendreRule{8, 32}, a, tol);
  return res.value;
}

double lemma2_ratio(const RadialWeight& w, double gamma, double r0, double t,
                    double r, double tol) {
  if (!(t - gamma > 2.0))
    throw std::invalid_argument("lemma2_ratio: hypothesis t - gamma > 2 fails (t = " +
                                std::to_string(t) + ", gamma = " + std::to_string(gamma) + ")");
  if (!(r >= r0))
    throw std::invalid_argument("lemma2_ratio: hypothesis r >= r0 fails");
  auto growth = validate_growth(w, gamma, r0);
  if (!growth.ok)
    throw std::invalid_argument(
        "lemma2_ratio: (1-rho)^{-gamma} w(rho) is not nondecreasing on [r0,1); "
        "first violation at rho = " + std::to_string(growth.violation_rho));
  double num = lemma2_tail(w, t, r0, r, tol);
  double den = lemma2_tail(w, t, r, r, tol);
  return num / den;
}

}  // namespace bern

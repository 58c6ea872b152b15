#include "bern/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bern {

void validate(const QuadratureSpec& spec) {
  if (spec.angular_points < 8 || (spec.angular_points & (spec.angular_points - 1)) != 0)
    throw std::invalid_argument("angular_points must be a power of two >= 8");
  if (!(spec.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(spec.annulus_alpha >= 0.0 && spec.annulus_alpha < 1.0))
    throw std::invalid_argument("annulus_alpha outside [0,1)");
}

double integrate_circle(const std::function<double(Complex)>& g, int N) {
  const double step = 2.0 * std::numbers::pi / N;
  double sum = 0.0;
  for (int j = 0; j < N; ++j) {
    double th = step * j;
    sum += g(Complex{std::cos(th), std::sin(th)});
  }
  return sum / N;
}

QuadResult integrate_circle_adaptive(const std::function<double(Complex)>& g,
                                     int N0, double tol, int max_N) {
  double prev = integrate_circle(g, N0);
  int N = N0;
  while (N < max_N) {
    N *= 2;
    double cur = integrate_circle(g, N);
    double err = std::abs(cur - prev);
    if (err <= tol * std::max(1.0, std::abs(cur))) return {cur, err, N};
    prev = cur;
  }
  double cur = integrate_circle(g, max_N);
  return {cur, std::abs(cur - prev), max_N};
}

void gauss_jacobi_nodes(int n, double alpha, std::vector<double>& x,
                        std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_nodes: n < 1");
  if (alpha <= -1.0) throw std::invalid_argument("gauss_jacobi_nodes: alpha <= -1");
  // Recurrence coefficients for the Jacobi weight (1-x)^alpha (1+x)^0.
  // Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto a_k = [alpha](int k) -> double {
    if (k == 0) return -alpha / (alpha + 2.0);
    double d = 2.0 * k + alpha;
    return -(alpha * alpha) / (d * (d + 2.0));
  };
  auto b_k = [alpha](int k) -> double {
    double d = 2.0 * k + alpha;
    return 4.0 * k * (k + alpha) * k * (k + alpha) / (d * d * (d + 1.0) * (d - 1.0));
  };
  for (int k = 0; k < n; ++k) J(k, k) = a_k(k);
  for (int k = 1; k < n; ++k) {
    double off = std::sqrt(b_k(k));
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double mu0 = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    x[k] = es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    w[k] = mu0 * v0 * v0;
  }
}

namespace {

double gl_panels(const std::function<double(double)>& g, double a, int panels,
                 int pts) {
  std::vector<double> x, w;
  gauss_jacobi_nodes(pts, 0.0, x, w);
  // Dyadic panels toward 1: [a, m_1], [m_1, m_2], ..., [m_{panels-1}, 1]
  // with m_j = 1 - (1-a) 2^{-j}.
  double sum = 0.0;
  double lo = a;
  for (int p = 0; p < panels; ++p) {
    double hi = (p == panels - 1) ? 1.0 : 1.0 - (1.0 - a) * std::pow(0.5, p + 1);
    // Deep panels underflow: once 1 - (1-a) 2^{-p} rounds onto lo, finish with
    // a single closing panel instead of evaluating on a degenerate interval.
    if (hi <= lo) hi = 1.0;
    double h = 0.5 * (hi - lo);
    double c = 0.5 * (hi + lo);
    for (int k = 0; k < pts; ++k) {
      double rho = c + h * x[k];
      if (rho >= 1.0) rho = std::nextafter(1.0, 0.0);
      sum += h * w[k] * g(rho);
    }
    if (hi >= 1.0) break;
    lo = hi;
  }
  return sum;
}

double gj_rule(const std::function<double(double)>& g, double a, double beta,
               int pts) {
  std::vector<double> x, w;
  gauss_jacobi_nodes(pts, beta, x, w);
  // rho = a + (1-a)(x+1)/2, (1-rho) = (1-a)(1-x)/2;
  // integral = ((1-a)/2)^{beta+1} * sum w_k * smooth(rho_k),
  // smooth(rho) = g(rho) (1-rho)^{-beta}.
  const double half = 0.5 * (1.0 - a);
  double sum = 0.0;
  for (int k = 0; k < pts; ++k) {
    double rho = a + half * (x[k] + 1.0);
    sum += w[k] * g(rho) * std::pow(1.0 - rho, -beta);
  }
  return std::pow(half, beta + 1.0) * sum;
}

}  // namespace

QuadResult integrate_radial(const std::function<double(double)>& g,
                            const RadialRule& rule, double a, double tol) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("integrate_radial: a outside [0,1)");
  if (std::holds_alternative<GaussLegendreRule>(rule)) {
    auto gl = std::get<GaussLegendreRule>(rule);
    int panels = std::max(1, gl.panels);
    double prev = gl_panels(g, a, panels, gl.points_per_panel);
    for (int it = 0; it < 7; ++it) {
      panels *= 2;
      double cur = gl_panels(g, a, panels, gl.points_per_panel);
      double err = std::abs(cur - prev);
      if (err <= tol * std::max(1.0, std::abs(cur)))
        return {cur, err, panels * gl.points_per_panel};
      prev = cur;
    }
    double cur = gl_panels(g, a, panels * 2, gl.points_per_panel);
    double err = std::abs(cur - prev);
    if (err > 1e3 * tol * std::max(1.0, std::abs(cur)))
      throw std::runtime_error("radial quadrature did not converge; achieved error " +
                               std::to_string(err));
    return {cur, err, 2 * panels * gl.points_per_panel};
  }
  auto gj = std::get<GaussJacobiRule>(rule);
  int pts = std::max(4, gj.points);
  double prev = gj_rule(g, a, gj.beta_exponent, pts);
  for (int it = 0; it < 8; ++it) {
    pts += 16;
    double cur = gj_rule(g, a, gj.beta_exponent, pts);
    double err = std::abs(cur - prev);
    if (err <= tol * std::max(1.0, std::abs(cur))) return {cur, err, pts};
    prev = cur;
  }
  double cur = gj_rule(g, a, gj.beta_exponent, pts + 16);
  double err = std::abs(cur - prev);
  if (err > 1e3 * tol * std::max(1.0, std::abs(cur)))
    throw std::runtime_error("Gauss-Jacobi quadrature did not converge; achieved error " +
                             std::to_string(err));
  return {cur, err, pts + 16};
}

QuadResult integrate_annulus(const std::function<double(Complex)>& F,
                             const RadialWeight& w, const QuadratureSpec& spec) {
  validate(spec);
  auto radial_integrand = [&](double rho) {
    auto circ = integrate_circle_adaptive(
        [&](Complex zeta) { return F(rho * zeta); }, spec.angular_points,
        0.1 * spec.tolerance);
    return w(rho) * circ.value;
  };
  RadialRule rule = spec.radial_rule;
  // Power weights with beta in (-1,0) have an endpoint singularity at rho = 1;
  // switch to the matching Gauss-Jacobi rule.
  if (w.is_power() && w.beta() < 0.0 && std::holds_alternative<GaussLegendreRule>(rule))
    rule = GaussJacobiRule{w.beta(), 48};
  return integrate_radial(radial_integrand, rule, spec.annulus_alpha, spec.tolerance);
}

}  // namespace bern

#ifndef BERN_QUADRATURE_HPP
#define BERN_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <variant>

#include "bern/weights.hpp"

namespace bern {

using Complex = std::complex<double>;

// Gauss-Legendre on dyadic panels refined toward rho = 1.
struct GaussLegendreRule {
  int panels = 8;
  int points_per_panel = 32;
};

// Gauss-Jacobi for integrands of the form (1-rho)^beta * smooth(rho).
struct GaussJacobiRule {
  double beta_exponent = 0.0;
  int points = 48;
};

using RadialRule = std::variant<GaussLegendreRule, GaussJacobiRule>;

struct QuadratureSpec {
  int angular_points = 1024;   // power of two, >= 8
  RadialRule radial_rule = GaussLegendreRule{};
  double annulus_alpha = 0.0;  // in [0,1)
  double tolerance = 1e-10;
};

void validate(const QuadratureSpec& spec);

// (1/N) sum_j g(e^{2 pi i j / N}); exact for trigonometric polynomials of
// degree < N under the normalized measure.
double integrate_circle(const std::function<double(Complex)>& g, int N);

struct QuadResult {
  double value;
  double error_estimate;
  int nodes_used;
};

// Doubles N until successive values agree to tol (relative, with absolute
// floor), starting from N0.
QuadResult integrate_circle_adaptive(const std::function<double(Complex)>& g,
                                     int N0, double tol, int max_N = 1 << 20);

// integral_a^1 g(rho) drho. Refines (panel doubling for Gauss-Legendre, order
// increase for Gauss-Jacobi) until the change is below tol; throws
// std::runtime_error with the achieved estimate on nonconvergence.
QuadResult integrate_radial(const std::function<double(double)>& g,
                            const RadialRule& rule, double a, double tol);

// integral_alpha^1 w(rho) [circle average of F on |z| = rho] drho.
QuadResult integrate_annulus(const std::function<double(Complex)>& F,
                             const RadialWeight& w, const QuadratureSpec& spec);

// Nodes/weights for integral_{-1}^1 (1-x)^alpha f(x) dx (Golub-Welsch);
// alpha = 0 gives Gauss-Legendre.
void gauss_jacobi_nodes(int n, double alpha, std::vector<double>& x,
                        std::vector<double>& w);

}  // namespace bern

#endif

#ifndef BERN_KERNEL_INTEGRALS_HPP
#define BERN_KERNEL_INTEGRALS_HPP

#include <string>

#include "bern/quadrature.hpp"
#include "bern/weights.hpp"

namespace bern {

// Kernel integrals on the circle, normalized measure throughout:
//   I(t, r)   = circle average of |1 - r zeta|^{-t}
//   phi_r(t)  = circle average of |1 + r z|^{t}
//   psi(r)    = integral_0^pi ln(1 + r^2 - 2 r cos s) ds   (identically zero)
// and the identity I(t, r) = (1 - r^2)^{1-t} phi_r(t-2) for t >= 2.

double I_quadrature(double t, double r, double tol = 1e-12);

// Series route: I(t,r) = sum_k a_k(t)^2 r^{2k} with a_k the Taylor
// coefficients of (1-z)^{-t/2}.
double I_series(double t, double r, double tail_tol = 1e-12);

double phi(double r, double t, double tol = 1e-12);

double psi(double r, double tol = 1e-12);

// Identity route, valid for t >= 2.
double I_identity(double t, double r);

struct KernelEval {
  std::string kernel;   // "i" | "phi" | "psi"
  std::string method;   // "series" | "quadrature" | "identity"
  double t;
  double r;
  double value;
};

// integral_a^1 rho w(rho) I(t, r rho) drho, inner I by the series route.
double lemma2_tail(const RadialWeight& w, double t, double a, double r,
                   double tol = 1e-10);

// lemma2_tail(w, t, r0, r) / lemma2_tail(w, t, r, r); requires t - gamma > 2,
// r >= r0 and the growth hypothesis on w.
double lemma2_ratio(const RadialWeight& w, double gamma, double r0, double t,
                    double r, double tol = 1e-10);

}  // namespace bern

#endif

#ifndef BERN_RATIONAL_HPP
#define BERN_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bern {

using Complex = std::complex<double>;

// One pole with its partial-fraction coefficients: sum_k a_k (1 - z/pole)^{-k}.
struct PoleTerm {
  Complex pole;                  // |pole| > 1
  std::vector<Complex> coeffs;   // a_1 .. a_m

  int multiplicity() const { return static_cast<int>(coeffs.size()); }
};

// Rational function with all poles strictly outside the closed unit disc,
// stored in partial fractions keyed by (1 - z/pole)^{-k}, plus an optional
// constant term. Polynomials (the r = 0 class) are stored separately as
// monomial coefficients behind the same operations.
//
// Immutable after construction.
class RationalFunction {
 public:
  // Zero function.
  RationalFunction() = default;

  RationalFunction(Complex constant, std::vector<PoleTerm> terms);

  static RationalFunction constant_fn(Complex c);

  // Polynomial sum_k coeffs[k] z^k in monomial form.
  static RationalFunction polynomial(std::vector<Complex> monomial_coeffs);

  // Single simple pole: a / (1 - z/pole).
  static RationalFunction simple_pole(Complex a, Complex pole);

  const std::vector<PoleTerm>& terms() const { return terms_; }
  Complex constant_term() const { return constant_; }
  const std::vector<Complex>& polynomial_coeffs() const { return poly_; }
  bool is_polynomial() const { return is_poly_; }

  // Sum of pole multiplicities; polynomial degree for the monomial case.
  int degree() const;

  // min_j |pole_j|; +inf when there are no pole terms.
  double min_pole_modulus() const;

  // max_j 1/|pole_j| in [0,1): geometric decay rate of the Taylor coefficients.
  double coeff_decay_rate() const;

  bool is_zero() const;

  Complex eval(Complex z) const;

  RationalFunction derivative() const;

  // Taylor coefficients f_hat(0..K).
  std::vector<Complex> taylor_coeffs(int K) const;

  // f_rho : z -> f(rho z), 0 < rho <= 1.
  RationalFunction dilate(double rho) const;

  RationalFunction scaled(Complex c) const;

 private:
  Complex constant_{0.0, 0.0};
  std::vector<PoleTerm> terms_;
  std::vector<Complex> poly_;   // monomial coefficients, degree >= 1 entries
  bool is_poly_ = false;
};

// b_r^n with b_r(z) = (r - z)/(1 - r z), expanded into constant + partial
// fractions at the pole 1/r. blaschke_power(0, n) = (-z)^n as a polynomial.
RationalFunction blaschke_power(double r, int n);

// Strict membership in R_{n,r}: degree <= n, pure proper fraction
// (zero constant), all poles of modulus >= 1/r. For r = 0 the class is the
// polynomials of degree <= n-1.
bool membership(const RationalFunction& f, int n, double r);

// Finite Blaschke product, |B| = 1 on the unit circle.
class BlaschkeProduct {
 public:
  struct Zero {
    Complex zero;   // |zero| < 1
    int multiplicity;
  };

  explicit BlaschkeProduct(std::vector<Zero> zeros);

  const std::vector<Zero>& zeros() const { return zeros_; }
  int order() const;
  Complex eval(Complex z) const;

 private:
  std::vector<Zero> zeros_;
};

}  // namespace bern

#endif

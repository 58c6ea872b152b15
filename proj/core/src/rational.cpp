#include "bern/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bern {

namespace {

constexpr double kConfluenceTol = 1e-9;

}  // namespace

RationalFunction::RationalFunction(Complex constant, std::vector<PoleTerm> terms)
    : constant_(constant), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (std::abs(t.pole) <= 1.0)
      throw std::invalid_argument("pole inside or on the closed unit disc: |pole| = " +
                                  std::to_string(std::abs(t.pole)));
    if (t.coeffs.empty()) throw std::invalid_argument("pole term with zero multiplicity");
  }
  for (size_t i = 0; i < terms_.size(); ++i)
    for (size_t j = i + 1; j < terms_.size(); ++j)
      if (std::abs(terms_[i].pole - terms_[j].pole) < kConfluenceTol)
        throw std::invalid_argument(
            "nearly confluent poles; merge them into a single higher-multiplicity term");
}

RationalFunction RationalFunction::constant_fn(Complex c) {
  RationalFunction f;
  f.constant_ = c;
  return f;
}

RationalFunction RationalFunction::polynomial(std::vector<Complex> monomial_coeffs) {
  while (!monomial_coeffs.empty() && monomial_coeffs.back() == Complex{0.0, 0.0})
    monomial_coeffs.pop_back();
  RationalFunction f;
  if (monomial_coeffs.empty()) return f;
  f.constant_ = monomial_coeffs.front();
  if (monomial_coeffs.size() > 1) {
    f.poly_.assign(monomial_coeffs.begin(), monomial_coeffs.end());
    f.is_poly_ = true;
  }
  return f;
}

RationalFunction RationalFunction::simple_pole(Complex a, Complex pole) {
  return RationalFunction{Complex{0.0, 0.0}, {PoleTerm{pole, {a}}}};
}

int RationalFunction::degree() const {
  if (is_poly_) return static_cast<int>(poly_.size()) - 1;
  int d = 0;
  for (const auto& t : terms_) d += t.multiplicity();
  return d;
}

double RationalFunction::min_pole_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) m = std::min(m, std::abs(t.pole));
  return m;
}

double RationalFunction::coeff_decay_rate() const {
  if (terms_.empty()) return 0.0;
  return 1.0 / min_pole_modulus();
}

bool RationalFunction::is_zero() const {
  if (constant_ != Complex{0.0, 0.0}) return false;
  if (is_poly_) {
    for (const auto& c : poly_)
      if (c != Complex{0.0, 0.0}) return false;
    return true;
  }
  for (const auto& t : terms_)
    for (const auto& a : t.coeffs)
      if (a != Complex{0.0, 0.0}) return false;
  return true;
}

Complex RationalFunction::eval(Complex z) const {
  if (is_poly_) {
    Complex v{0.0, 0.0};
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) v = v * z + *it;
    return v;
  }
  Complex v = constant_;
  for (const auto& t : terms_) {
    if (std::abs(z - t.pole) < 1e-12 * std::abs(t.pole))
      throw std::domain_error("evaluation point within the pole guard distance");
    Complex u = 1.0 / (1.0 - z / t.pole);
    Complex p = u;
    for (const auto& a : t.coeffs) {
      v += a * p;
      p *= u;
    }
  }
  return v;
}

RationalFunction RationalFunction::derivative() const {
  if (is_poly_) {
    std::vector<Complex> d(poly_.size() > 1 ? poly_.size() - 1 : 0);
    for (size_t k = 1; k < poly_.size(); ++k) d[k - 1] = static_cast<double>(k) * poly_[k];
    return polynomial(std::move(d));
  }
  // d/dz (1 - z/zeta)^{-k} = (k/zeta)(1 - z/zeta)^{-k-1}
  std::vector<PoleTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    PoleTerm d{t.pole, std::vector<Complex>(t.multiplicity() + 1, Complex{0.0, 0.0})};
    for (int k = 1; k <= t.multiplicity(); ++k)
      d.coeffs[k] = t.coeffs[k - 1] * (static_cast<double>(k) / t.pole);
    out.push_back(std::move(d));
  }
  return RationalFunction{Complex{0.0, 0.0}, std::move(out)};
}

std::vector<Complex> RationalFunction::taylor_coeffs(int K) const {
  if (K < 0) throw std::invalid_argument("taylor_coeffs: K < 0");
  std::vector<Complex> c(K + 1, Complex{0.0, 0.0});
  c[0] = constant_;
  if (is_poly_) {
    for (size_t k = 1; k < poly_.size() && k <= static_cast<size_t>(K); ++k) c[k] = poly_[k];
    return c;
  }
  for (const auto& t : terms_) {
    Complex inv_pole = 1.0 / t.pole;
    for (int m = 1; m <= t.multiplicity(); ++m) {
      // binom(k+m-1, m-1) / pole^k by multiplicative recurrence
      Complex b{1.0, 0.0};
      for (int k = 0; k <= K; ++k) {
        c[k] += t.coeffs[m - 1] * b;
        b *= inv_pole * (static_cast<double>(k + m) / static_cast<double>(k + 1));
      }
    }
  }
  return c;
}

RationalFunction RationalFunction::dilate(double rho) const {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("dilate: rho outside (0,1]");
  if (is_poly_) {
    std::vector<Complex> c = poly_;
    double p = 1.0;
    for (size_t k = 0; k < c.size(); ++k) {
      c[k] *= p;
      p *= rho;
    }
    return polynomial(std::move(c));
  }
  // f(rho z): poles move to pole/rho, coefficients are unchanged in this basis.
  std::vector<PoleTerm> out = terms_;
  for (auto& t : out) t.pole /= rho;
  return RationalFunction{constant_, std::move(out)};
}

RationalFunction RationalFunction::scaled(Complex c) const {
  RationalFunction f = *this;
  f.constant_ *= c;
  for (auto& t : f.terms_)
    for (auto& a : t.coeffs) a *= c;
  for (auto& a : f.poly_) a *= c;
  return f;
}

RationalFunction blaschke_power(double r, int n) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("blaschke_power: r outside [0,1)");
  if (n < 1) throw std::invalid_argument("blaschke_power: n < 1");
  if (r == 0.0) {
    // b_0(z) = -z, so b_0^n = (-z)^n
    std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
    c[n] = (n % 2 == 0) ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
    return RationalFunction::polynomial(std::move(c));
  }
  // b_r = 1/r - ((1-r^2)/r) (1 - r z)^{-1}; expand the n-th power binomially.
  // The pole is 1/r with multiplicity n.
  const double s = 1.0 / r;
  const double q = -(1.0 - r * r) / r;
  PoleTerm term{Complex{s, 0.0}, std::vector<Complex>(n, Complex{0.0, 0.0})};
  double binom = 1.0;
  double qs = 1.0;       // q^k s^{n-k} running product, start k = 0
  double sp = std::pow(s, n);
  Complex constant{sp, 0.0};
  for (int k = 1; k <= n; ++k) {
    binom *= static_cast<double>(n - k + 1) / static_cast<double>(k);
    qs = qs * q / s;
    term.coeffs[k - 1] = Complex{binom * sp * qs, 0.0};
  }
  return RationalFunction{constant, {std::move(term)}};
}

bool membership(const RationalFunction& f, int n, double r) {
  if (r < 0.0 || r >= 1.0) throw std::invalid_argument("membership: r outside [0,1)");
  if (r == 0.0) {
    // R_{n,0} = polynomials of degree <= n-1
    if (!f.terms().empty()) return false;
    if (f.is_polynomial()) return f.degree() <= n - 1;
    return true;  // a constant
  }
  if (f.is_polynomial()) return false;
  if (f.constant_term() != Complex{0.0, 0.0}) return false;
  if (f.degree() > n) return false;
  return f.terms().empty() || f.min_pole_modulus() >= 1.0 / r - 1e-14;
}

BlaschkeProduct::BlaschkeProduct(std::vector<Zero> zeros) : zeros_(std::move(zeros)) {
  for (const auto& z : zeros_) {
    if (std::abs(z.zero) >= 1.0)
      throw std::invalid_argument("Blaschke zero outside the open unit disc");
    if (z.multiplicity < 1) throw std::invalid_argument("Blaschke zero multiplicity < 1");
  }
}

int BlaschkeProduct::order() const {
  int n = 0;
  for (const auto& z : zeros_) n += z.multiplicity;
  return n;
}

Complex BlaschkeProduct::eval(Complex z) const {
  Complex v{1.0, 0.0};
  for (const auto& zz : zeros_) {
    Complex b = (zz.zero - z) / (1.0 - std::conj(zz.zero) * z);
    for (int k = 0; k < zz.multiplicity; ++k) v *= b;
  }
  return v;
}

}  // namespace bern

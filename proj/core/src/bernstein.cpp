#include "bern/bernstein.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bern/kernel_integrals.hpp"

namespace bern {

std::string to_string(EstimateKind k) {
  switch (k) {
    case EstimateKind::single_function: return "single-function";
    case EstimateKind::exact_confluent_h2: return "exact-confluent-h2";
    case EstimateKind::sampled_upper: return "sampled-upper";
    case EstimateKind::extremal_lower: return "extremal-lower";
  }
  return "?";
}

namespace {

// (n, r) of the smallest class R_{n,r} containing f; polynomials sit in
// R_{degree+1, 0}.
void class_params(const RationalFunction& f, int& n, double& r) {
  if (f.terms().empty()) {
    n = std::max(1, f.degree() + 1);
    r = 0.0;
  } else {
    n = f.degree();
    r = 1.0 / f.min_pole_modulus();
  }
}

double normalized_of(double value, int n, double r) {
  return value * (1.0 - r) / static_cast<double>(n);
}

// Orthonormal Malmquist basis of span{ z^j (1-rz)^{-n} : j < n }:
//   e_k(z) = sqrt(1-r^2) (1-rz)^{-1} b(z)^k,  b(z) = (z-r)/(1-rz).
// The Gram is the identity, so the operator norm of d/dz on the span is the
// square root of the top eigenvalue of H_{kl} = sum_m m^2 e_k(m) e_l(m),
// where e_k(m) are the (real) Taylor coefficients. Successive columns come
// from the coefficient recurrence for multiplication by b:
//   g(m) = r g(m-1) + f(m-1) - r f(m).
// The monomial-shift basis z^j (1-rz)^{-n} is avoided on purpose: its Gram is
// catastrophically ill-conditioned already for modest n.
Eigen::MatrixXd confluent_derivative_gram(int n, double r, double tail_tol) {
  const double x = r * r;
  const double cut = tail_tol * tail_tol * (1.0 - x);
  const long mmax = 50000000;
  std::vector<std::vector<double>> cols(n);
  {
    auto& c0 = cols[0];
    double v = std::sqrt(1.0 - x);
    for (long m = 0;; ++m) {
      c0.push_back(v);
      if (r == 0.0) break;
      if (m > 0 && static_cast<double>(m) * m * v * v < cut) break;
      if (m > mmax) throw std::runtime_error("confluent basis series did not converge");
      v *= r;
    }
  }
  for (int k = 1; k < n; ++k) {
    const auto& f = cols[k - 1];
    auto& g = cols[k];
    const long flen = static_cast<long>(f.size());
    double prev = 0.0;
    for (long m = 0;; ++m) {
      double fm1 = (m >= 1 && m - 1 < flen) ? f[m - 1] : 0.0;
      double fm = (m < flen) ? f[m] : 0.0;
      double v = r * prev + fm1 - r * fm;
      g.push_back(v);
      prev = v;
      if (m >= flen && (r == 0.0 || static_cast<double>(m) * m * v * v < cut)) break;
      if (m > mmax) throw std::runtime_error("confluent basis series did not converge");
    }
  }
  Eigen::MatrixXd H(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      size_t len = std::min(cols[k].size(), cols[l].size());
      double h = 0.0;
      for (size_t m = 1; m < len; ++m)
        h += static_cast<double>(m) * m * cols[k][m] * cols[l][m];
      H(k, l) = h;
      H(l, k) = h;
    }
  return H;
}

double power_iteration_max(const Eigen::MatrixXd& M, std::uint64_t seed = 42) {
  const int n = static_cast<int>(M.rows());
  if (n == 1) return M(0, 0);
  // Plain power iteration stalls when the top of the spectrum is nearly
  // degenerate, so square the operator repeatedly first: after s squarings a
  // mode at ratio rho of the top survives as rho^(2^s), which flattens every
  // measurable gap. A short Rayleigh-quotient polish with M itself finishes.
  Eigen::MatrixXd A = M / std::max(1e-300, M.norm());
  for (int s = 0; s < 30; ++s) {
    A = A * A;
    double f = A.norm();
    if (!(f > 0.0)) return 0.0;
    A /= f;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w(i) = gauss(rng);
  Eigen::VectorXd v = A * w;
  if (!(v.norm() > 0.0)) v = w;
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd u = M * v;
    double l = v.dot(u);
    double un = u.norm();
    if (un == 0.0) return 0.0;
    u /= un;
    if (it > 0 && std::abs(l - lambda) <= 1e-15 * std::max(1.0, std::abs(l))) return l;
    lambda = l;
    v = u;
  }
  return lambda;
}

}  // namespace

BernsteinEstimate ratio(const RationalFunction& f, const SpaceDescriptor& space,
                        const QuadratureSpec& spec, bool prefer_series) {
  NormResult nf = space_norm(f, space, spec, prefer_series);
  if (!(nf.value > 0.0)) throw std::invalid_argument("ratio: zero-norm input");
  NormResult nd = space_norm(f.derivative(), space, spec, prefer_series);
  BernsteinEstimate e;
  class_params(f, e.n, e.r);
  e.space = describe(space);
  e.kind = EstimateKind::single_function;
  e.value = nd.value / nf.value;
  e.normalized = normalized_of(e.value, e.n, e.r);
  e.error_estimate =
      e.value * (nd.error_estimate / std::max(nd.value, 1e-300) +
                 nf.error_estimate / nf.value);
  return e;
}

BernsteinEstimate lower_bound_extremal(int n, double r, const SpaceDescriptor& space,
                                       const QuadratureSpec& spec) {
  if (n < 1) throw std::invalid_argument("lower_bound_extremal: n < 1");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("lower_bound_extremal: r outside (0,1)");
  BernsteinEstimate e;
  e.n = n;
  e.r = r;
  e.space = describe(space);
  e.kind = EstimateKind::extremal_lower;
  if (std::holds_alternative<HardySpace>(space)) {
    double p = std::get<HardySpace>(space).p;
    if (std::isinf(p)) {
      // no kernel shortcut at p = inf; fall back to the norm engine
      PoleTerm term{Complex{1.0 / r, 0.0},
                    std::vector<Complex>(n, Complex{0.0, 0.0})};
      term.coeffs.back() = Complex{1.0, 0.0};
      RationalFunction f{Complex{0.0, 0.0}, {term}};
      auto est = ratio(f, space, spec, false);
      e.value = est.value;
      e.error_estimate = est.error_estimate;
    } else {
      double lf = std::log(I_series(p * n, r));
      double ld = std::log(I_series(p * n + p, r));
      e.value = n * r * std::exp((ld - lf) / p);
    }
  } else {
    const auto& b = std::get<BergmanSpace>(space);
    double p = b.p;
    // Theorem hypothesis check for caller-declared growth witnesses; the
    // power family is computed unconditionally.
    if (!b.weight.is_power() && b.weight.declared_gamma()) {
      double gamma = *b.weight.declared_gamma();
      double r0 = b.weight.declared_r0().value_or(0.0);
      int n_min = static_cast<int>(std::floor((gamma + 2.0) / p)) + 1;
      if (n <= n_min)
        throw std::invalid_argument(
            "lower_bound_extremal: theorem hypothesis n > [(gamma+2)/p]+1 fails (need n > " +
            std::to_string(n_min) + ")");
      if (r < r0)
        throw std::invalid_argument("lower_bound_extremal: theorem hypothesis r >= r0 fails");
    }
    double tol = std::min(1e-9, spec.tolerance);
    RadialRule rule = GaussLegendreRule{8, 32};
    if (b.weight.is_power() && b.weight.beta() < 0.0)
      rule = GaussJacobiRule{b.weight.beta(), 48};
    auto J = [&](double t) {
      return integrate_radial(
                 [&](double rho) { return b.weight(rho) * I_series(t, r * rho); },
                 rule, 0.0, tol)
          .value;
    };
    double jf = J(p * n);
    double jd = J(p * n + p);
    e.value = n * r * std::pow(jd / jf, 1.0 / p);
  }
  e.normalized = normalized_of(e.value, n, r);
  return e;
}

double h2_confluent_operator_norm_dense(int n, double r, double tail_tol) {
  Eigen::MatrixXd H = confluent_derivative_gram(n, r, tail_tol);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolve failed");
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

BernsteinEstimate h2_confluent_operator_norm(int n, double r, double tail_tol) {
  if (n < 1) throw std::invalid_argument("h2_confluent_operator_norm: n < 1");
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("h2_confluent_operator_norm: r outside [0,1)");
  Eigen::MatrixXd H = confluent_derivative_gram(n, r, tail_tol);
  double lambda = power_iteration_max(H);
  BernsteinEstimate e;
  e.n = n;
  e.r = r;
  e.space = "hardy:2";
  e.kind = EstimateKind::exact_confluent_h2;
  e.value = std::sqrt(std::max(0.0, lambda));
  e.normalized = normalized_of(e.value, n, r);
  return e;
}

RationalFunction random_member(int n, double r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_member: n < 1");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("random_member: r outside (0,1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> umod(1.0 / r, 2.0 / r);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss;
  // Random multiplicity profile summing to n. Distinct well-separated simple
  // poles keep the derivative ratio near the worst single-pole ratio, so a
  // sampler over simple poles alone never exhibits the n-growth of the class
  // constant; allowing confluent draws covers both regimes.
  // Half the draws are fully confluent so the max statistics stay comparable
  // across n; the rest spread over every profile.
  int d = 1;
  if (n > 1 && std::uniform_int_distribution<int>(0, 1)(rng) == 1)
    d = std::uniform_int_distribution<int>(2, n)(rng);
  std::vector<int> mult(d, 1);
  for (int extra = 0; extra < n - d; ++extra)
    ++mult[std::uniform_int_distribution<int>(0, d - 1)(rng)];
  std::vector<PoleTerm> terms;
  terms.reserve(d);
  while (static_cast<int>(terms.size()) < d) {
    double m = umod(rng);
    double a = uang(rng);
    Complex pole{m * std::cos(a), m * std::sin(a)};
    bool clash = false;
    for (const auto& t : terms)
      if (std::abs(t.pole - pole) < 1e-8) clash = true;
    if (clash) continue;
    std::vector<Complex> coeffs(mult[terms.size()]);
    for (auto& c : coeffs) c = Complex{gauss(rng), gauss(rng)};
    terms.push_back(PoleTerm{pole, std::move(coeffs)});
  }
  return RationalFunction{Complex{0.0, 0.0}, std::move(terms)};
}

BernsteinEstimate sampled_upper(int n, double r, const SpaceDescriptor& space,
                                int samples, std::uint64_t seed,
                                const QuadratureSpec& spec) {
  if (samples < 1) throw std::invalid_argument("sampled_upper: samples < 1");
  BernsteinEstimate best;
  best.n = n;
  best.r = r;
  best.space = describe(space);
  best.kind = EstimateKind::sampled_upper;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(i + 1);
    RationalFunction f = random_member(n, r, s);
    auto est = ratio(f, space, spec, true);
    if (est.value > best.value) {
      best.value = est.value;
      best.error_estimate = est.error_estimate;
    }
  }
  best.normalized = normalized_of(best.value, n, r);
  return best;
}

SweepMode parse_sweep_mode(const std::string& s) {
  if (s == "lower") return SweepMode::lower;
  if (s == "sampled") return SweepMode::sampled;
  if (s == "exact-h2") return SweepMode::exact_h2;
  throw std::invalid_argument("unknown sweep mode: " + s);
}

std::vector<BernsteinEstimate> sweep(const std::vector<int>& n_list,
                                     const std::vector<double>& r_list,
                                     const SpaceDescriptor& space, SweepMode mode,
                                     const QuadratureSpec& spec, int samples,
                                     std::uint64_t seed) {
  if (n_list.empty() || r_list.empty())
    throw std::invalid_argument("sweep: empty parameter list");
  std::vector<int> ns = n_list;
  std::vector<double> rs = r_list;
  std::sort(ns.begin(), ns.end());
  std::sort(rs.begin(), rs.end());
  std::vector<BernsteinEstimate> out;
  std::uint64_t cell = 0;
  for (double r : rs)
    for (int n : ns) {
      ++cell;
      BernsteinEstimate e;
      try {
        switch (mode) {
          case SweepMode::lower:
            e = lower_bound_extremal(n, r, space, spec);
            break;
          case SweepMode::sampled:
            e = sampled_upper(n, r, space, samples, seed ^ (cell * 0x9E3779B97F4A7C15ull),
                              spec);
            break;
          case SweepMode::exact_h2:
            e = h2_confluent_operator_norm(n, r);
            break;
        }
      } catch (const std::exception& ex) {
        e.n = n;
        e.r = r;
        e.space = describe(space);
        e.error = ex.what();
      }
      out.push_back(std::move(e));
    }
  return out;
}

LimitCheckReport limit_check(double r, const std::vector<int>& n_list, double tol) {
  if (n_list.empty()) throw std::invalid_argument("limit_check: empty n list");
  for (size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("limit_check: n list must be increasing");
  if (n_list.back() > 256) throw std::invalid_argument("limit_check: max n is 256");
  LimitCheckReport rep;
  rep.r = r;
  rep.tol = tol;
  rep.limit = (1.0 + r) / (1.0 - r);
  for (int n : n_list) {
    auto e = h2_confluent_operator_norm(n, r);
    LimitCheckRow row;
    row.n = n;
    row.value = e.value;
    row.value_over_n = e.value / n;
    row.rel_error = std::abs(row.value_over_n - rep.limit) / rep.limit;
    rep.rows.push_back(row);
  }
  rep.monotone_value = true;
  rep.monotone_error = true;
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].value_over_n < rep.rows[i - 1].value_over_n * (1.0 - 1e-12))
      rep.monotone_value = false;
    if (rep.rows[i].rel_error > rep.rows[i - 1].rel_error * (1.0 + 1e-12))
      rep.monotone_error = false;
  }
  rep.final_error_ok = rep.rows.back().rel_error < tol;
  return rep;
}

}  // namespace bern

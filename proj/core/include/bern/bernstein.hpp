#ifndef BERN_BERNSTEIN_HPP
#define BERN_BERNSTEIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bern/norms.hpp"
#include "bern/rational.hpp"

namespace bern {

enum class EstimateKind {
  single_function,
  exact_confluent_h2,
  sampled_upper,
  extremal_lower,
};

std::string to_string(EstimateKind k);

struct BernsteinEstimate {
  int n = 0;
  double r = 0.0;
  std::string space;
  EstimateKind kind = EstimateKind::single_function;
  double value = 0.0;       // derivative-to-function norm ratio, or operator norm
  double normalized = 0.0;  // value * (1 - r) / n
  double error_estimate = 0.0;
  std::optional<std::string> error;  // per-cell failure note in sweeps
};

// ||f'|| / ||f|| in the given space; (n, r) are read off f (degree and the
// smallest admissible r). p = 2 routes through the series norms.
BernsteinEstimate ratio(const RationalFunction& f, const SpaceDescriptor& space,
                        const QuadratureSpec& spec = {}, bool prefer_series = true);

// Ratio of the extremal test function f = 1/(1 - r z)^n, computed through the
// kernel-integral route: ||f||_{H^p}^p = I(pn, r) and, for Bergman,
// ||f||^p = integral_0^1 w(rho) I(pn, r rho) drho (and t -> pn + p for f').
// A certified lower bound for the Bernstein constant of the space.
BernsteinEstimate lower_bound_extremal(int n, double r, const SpaceDescriptor& space,
                                       const QuadratureSpec& spec = {});

// Exact H^2 operator norm of differentiation on the confluent model space
// span{ z^j / (1 - r z)^n : j < n }: top eigenvalue of the derivative Gram in
// the orthonormal Malmquist basis, by power iteration.
BernsteinEstimate h2_confluent_operator_norm(int n, double r, double tail_tol = 1e-12);

// Max ratio over random f in R_{n,r}: a random multiplicity profile summing
// to n, poles with modulus uniform on [1/r, 2/r] and uniform angle, complex
// Gaussian coefficients. Deterministic for a fixed seed.
BernsteinEstimate sampled_upper(int n, double r, const SpaceDescriptor& space,
                                int samples, std::uint64_t seed,
                                const QuadratureSpec& spec = {});

RationalFunction random_member(int n, double r, std::uint64_t seed);

enum class SweepMode { lower, sampled, exact_h2 };

SweepMode parse_sweep_mode(const std::string& s);

std::vector<BernsteinEstimate> sweep(const std::vector<int>& n_list,
                                     const std::vector<double>& r_list,
                                     const SpaceDescriptor& space, SweepMode mode,
                                     const QuadratureSpec& spec = {},
                                     int samples = 100, std::uint64_t seed = 1);

struct LimitCheckRow {
  int n;
  double value;        // exact confluent H^2 operator norm
  double value_over_n;
  double rel_error;    // |value/n - (1+r)/(1-r)| / ((1+r)/(1-r))
};

struct LimitCheckReport {
  double r;
  double limit;  // (1+r)/(1-r)
  std::vector<LimitCheckRow> rows;
  bool monotone_value = false;   // value/n nondecreasing
  bool monotone_error = false;   // rel_error nonincreasing
  bool final_error_ok = false;   // last rel_error < tol
  double tol;
  bool passed() const { return monotone_value && monotone_error && final_error_ok; }
};

LimitCheckReport limit_check(double r, const std::vector<int>& n_list, double tol);

// Dense-eigensolver route for the same derivative Gram; oracle for the power
// iteration (intended for small n).
double h2_confluent_operator_norm_dense(int n, double r, double tail_tol = 1e-12);

}  // namespace bern

#endif

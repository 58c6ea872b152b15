#include "bern/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <vector>

#include "bern/bernstein.hpp"
#include "bern/kernel_integrals.hpp"
#include "bern/norms.hpp"
#include "bern/rational.hpp"
#include "bern/weights.hpp"

namespace bern {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return buf;
}

void add(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail) {
  out.push_back({name, ok, detail});
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> verify_lemma1_identity() {
  std::vector<CheckResult> out;
  const double ts[] = {2.0, 3.0, 4.5, 10.0, 40.0};
  const double rs[] = {0.0, 0.3, 0.7, 0.95};
  double worst_qi = 0.0, worst_sq = 0.0;
  for (double t : ts)
    for (double r : rs) {
      double iq = I_quadrature(t, r, 1e-10);
      double ii = I_identity(t, r);
      double is = I_series(t, r);
      worst_qi = std::max(worst_qi, std::abs(iq - ii) / iq);
      worst_sq = std::max(worst_sq, std::abs(is - iq) / iq);
    }
  add(out, "lemma1.identity.quad_vs_identity", worst_qi < 1e-8,
      fmt("max rel diff %.3e (tol 1e-8)", worst_qi));
  add(out, "lemma1.identity.series_vs_quad", worst_sq < 1e-8,
      fmt("max rel diff %.3e (tol 1e-8)", worst_sq));
  return out;
}

std::vector<CheckResult> verify_closed_form_anchors() {
  std::vector<CheckResult> out;
  double worst2 = 0.0, worst4 = 0.0;
  for (double r : {0.1, 0.5, 0.9}) {
    double x = r * r;
    worst2 = std::max(worst2, std::abs(I_series(2.0, r) - 1.0 / (1.0 - x)) * (1.0 - x));
    double exact4 = (1.0 + x) / std::pow(1.0 - x, 3.0);
    worst4 = std::max(worst4, std::abs(I_series(4.0, r) - exact4) / exact4);
  }
  add(out, "anchors.I2", worst2 < 1e-10, fmt("max rel diff %.3e (tol 1e-10)", worst2));
  add(out, "anchors.I4", worst4 < 1e-10, fmt("max rel diff %.3e (tol 1e-10)", worst4));
  return out;
}

std::vector<CheckResult> verify_psi_zero() {
  std::vector<CheckResult> out;
  double worst = 0.0;
  for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99})
    worst = std::max(worst, std::abs(psi(r)));
  add(out, "psi.zero", worst < 1e-9, fmt("max |psi(r)| %.3e (tol 1e-9)", worst));
  double worst_fe = 0.0;
  for (double r : {0.3, 0.7, 0.9})
    worst_fe = std::max(worst_fe, std::abs(2.0 * psi(r) - psi(r * r)));
  add(out, "psi.functional_equation", worst_fe < 1e-9,
      fmt("max |2 psi(r) - psi(r^2)| %.3e (tol 1e-9)", worst_fe));
  return out;
}

std::vector<CheckResult> verify_monotonicity() {
  std::vector<CheckResult> out;
  const double slack = 1e-10;
  bool inc_t = true, convex_t = true;
  for (double r : {0.2, 0.5, 0.8}) {
    std::vector<double> vals;
    for (int t = 0; t <= 60; t += 2) vals.push_back(phi(r, t));
    for (size_t i = 1; i < vals.size(); ++i)
      if (vals[i] < vals[i - 1] * (1.0 - slack) - slack) inc_t = false;
    for (size_t i = 2; i < vals.size(); ++i)
      if (vals[i] - 2.0 * vals[i - 1] + vals[i - 2] < -1e-10 * std::max(1.0, vals[i]))
        convex_t = false;
  }
  add(out, "monotonicity.phi_increasing_in_t", inc_t, "t grid [0,60], r in {0.2,0.5,0.8}");
  add(out, "monotonicity.phi_convex_in_t", convex_t, "second differences >= -1e-10");
  bool inc_r_I = true, inc_r_phi = true;
  const double rgrid[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  for (double t : {1.0, 3.0, 10.0}) {
    double prevI = -1.0, prevP = -1.0;
    for (double r : rgrid) {
      double vi = I_series(t, r);
      double vp = phi(r, t);
      if (prevI > vi * (1.0 + slack)) inc_r_I = false;
      if (prevP > vp * (1.0 + slack)) inc_r_phi = false;
      prevI = vi;
      prevP = vp;
    }
  }
  add(out, "monotonicity.I_increasing_in_r", inc_r_I, "t in {1,3,10}, r grid to 0.95");
  add(out, "monotonicity.phi_increasing_in_r", inc_r_phi, "t in {1,3,10}, r grid to 0.95");
  return out;
}

std::vector<CheckResult> verify_parseval() {
  std::vector<CheckResult> out;
  QuadratureSpec spec;
  spec.tolerance = 1e-9;
  // coefficients of |f(rho zeta)|^2 decay like (0.8 rho)^k, so 256 angular
  // points are already spectrally exact; the adaptive rule still doubles once
  // to confirm
  spec.angular_points = 256;
  double worst_h = 0.0, worst_b = 0.0;
  const double betas[] = {-0.5, 0.0, 1.0};
  for (int i = 0; i < 50; ++i) {
    RationalFunction f = random_member(8, 0.8, 7000 + i);
    double hs = hardy2_norm_series(f).value;
    double hq = hardy_norm(f, 2.0, spec).value;
    worst_h = std::max(worst_h, std::abs(hs - hq) / hq);
    // rotate across the three weights rather than all three per sample to
    // keep the runtime within budget
    double beta = betas[i % 3];
    RadialWeight w = RadialWeight::power(beta);
    double bs = bergman2_norm_series(f, w).value;
    double bq = bergman_norm(f, 2.0, w, spec).value;
    worst_b = std::max(worst_b, std::abs(bs - bq) / bq);
  }
  add(out, "parseval.hardy2", worst_h < 1e-7, fmt("max rel diff %.3e (tol 1e-7)", worst_h));
  add(out, "parseval.bergman2", worst_b < 1e-7, fmt("max rel diff %.3e (tol 1e-7)", worst_b));
  return out;
}

std::vector<CheckResult> verify_lower_bound() {
  std::vector<CheckResult> out;
  double min_norm = std::numeric_limits<double>::infinity();
  std::string where;
  for (double p : {1.0, 2.0, 3.0})
    for (double beta : {0.0, 1.0}) {
      SpaceDescriptor space = BergmanSpace{p, RadialWeight::power(beta)};
      for (int n : {4, 8, 16, 32, 64})
        for (double r : {0.5, 0.8, 0.9}) {
          auto e = lower_bound_extremal(n, r, space);
          if (e.normalized < min_norm) {
            min_norm = e.normalized;
            where = fmt("p=%g beta=%g n=%d r=%g", p, beta, n, r);
          }
        }
    }
  add(out, "theorem2.lower_bound_floor", min_norm >= 0.1,
      fmt("min normalized ratio %.6f at %s (floor 0.1)", min_norm, where.c_str()));
  return out;
}

std::vector<CheckResult> verify_upper_sampling() {
  std::vector<CheckResult> out;
  SpaceDescriptor space = BergmanSpace{2.0, RadialWeight::power(0.0)};
  double norm_min = std::numeric_limits<double>::infinity();
  double norm_max = 0.0;
  std::vector<double> log_n, log_v;
  for (int n : {4, 8, 16, 32, 64})
    for (double r : {0.5, 0.8, 0.9}) {
      auto e = sampled_upper(n, r, space, 100, 20240 + n, {});
      norm_min = std::min(norm_min, e.normalized);
      norm_max = std::max(norm_max, e.normalized);
      if (r == 0.8) {
        log_n.push_back(std::log(static_cast<double>(n)));
        log_v.push_back(std::log(e.value));
      }
    }
  add(out, "theorem1.sampled_spread", norm_max / norm_min < 10.0,
      fmt("normalized spread %.3f (max %.4f / min %.4f, bound 10)",
          norm_max / norm_min, norm_max, norm_min));
  // least-squares slope of log(value) vs log(n) at r = 0.8
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < log_n.size(); ++i) {
    mx += log_n[i];
    my += log_v[i];
  }
  mx /= log_n.size();
  my /= log_n.size();
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_v[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  double slope = sxy / sxx;
  add(out, "theorem1.sampled_slope", std::abs(slope - 1.0) <= 0.1,
      fmt("log-log slope of value vs n at r=0.8: %.4f (target 1.0 +- 0.1)", slope));
  return out;
}

std::vector<CheckResult> verify_h2_limit() {
  std::vector<CheckResult> out;
  const std::vector<int> ns = {8, 16, 32, 64};
  {
    auto rep = limit_check(0.0, ns, 0.02);
    bool exact = true;
    for (const auto& row : rep.rows)
      if (std::abs(row.value - (row.n - 1)) > 1e-10 * row.n) exact = false;
    add(out, "h2_limit.r0_exact", exact && rep.passed(),
        fmt("r=0: value = n-1 to 1e-10, final rel error %.5f (tol 0.02)",
            rep.rows.back().rel_error));
  }
  for (double r : {0.3, 0.5}) {
    auto rep = limit_check(r, ns, 0.15);
    add(out, fmt("h2_limit.r%.1f", r), rep.passed(),
        fmt("final rel error %.4f (tol 0.15), monotone value %d, monotone error %d",
            rep.rows.back().rel_error, rep.monotone_value ? 1 : 0,
            rep.monotone_error ? 1 : 0));
  }
  return out;
}

std::vector<CheckResult> verify_lemma2() {
  std::vector<CheckResult> out;
  RadialWeight w = RadialWeight::power(1.0);
  const double gamma = 2.0, r0 = 0.5;
  bool all_ge_1 = true;
  double worst_spread = 0.0;
  for (double r : {0.6, 0.8, 0.9}) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double t : {5.0, 10.0, 20.0, 40.0, 80.0}) {
      double ratio = lemma2_ratio(w, gamma, r0, t, r);
      if (ratio < 1.0 - 1e-12) all_ge_1 = false;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    worst_spread = std::max(worst_spread, hi / lo);
  }
  add(out, "lemma2.ratio_ge_1", all_ge_1, "all ratios >= 1");
  add(out, "lemma2.t_independence", worst_spread < 2.0,
      fmt("max over-t spread %.4f (bound 2)", worst_spread));
  return out;
}

std::vector<CheckResult> verify_eigen_oracle() {
  std::vector<CheckResult> out;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n)
    for (double r : {0.0, 0.5, 0.9}) {
      double vp = h2_confluent_operator_norm(n, r).value;
      double vd = h2_confluent_operator_norm_dense(n, r);
      double ref = std::max(vd, 1.0);
      worst = std::max(worst, std::abs(vp - vd) / ref);
    }
  add(out, "eigen.power_vs_dense", worst < 1e-10,
      fmt("max rel diff %.3e (tol 1e-10)", worst));
  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (auto fn : {verify_lemma1_identity, verify_psi_zero, verify_monotonicity,
                  verify_closed_form_anchors, verify_parseval, verify_lower_bound,
                  verify_upper_sampling, verify_h2_limit, verify_lemma2,
                  verify_eigen_oracle}) {
    auto part = fn();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace bern

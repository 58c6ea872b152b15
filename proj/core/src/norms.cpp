#include "bern/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bern {

std::string describe(const SpaceDescriptor& space) {
  std::ostringstream os;
  if (std::holds_alternative<HardySpace>(space)) {
    double p = std::get<HardySpace>(space).p;
    os << "hardy:";
    if (std::isinf(p))
      os << "inf";
    else
      os << p;
  } else {
    const auto& b = std::get<BergmanSpace>(space);
    os << "bergman:" << b.p << ":" << b.weight.describe();
  }
  return os.str();
}

SpaceDescriptor parse_space(const std::string& descriptor) {
  auto bad = [&] {
    throw std::invalid_argument(
        "unrecognized space descriptor '" + descriptor +
        "' (expected hardy:<p>, hardy:inf, bergman:<p>:beta:<b> or bergman:<p>:table:<path>)");
  };
  auto colon = descriptor.find(':');
  if (colon == std::string::npos) bad();
  std::string family = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);
  if (family == "hardy") {
    double p = (rest == "inf") ? std::numeric_limits<double>::infinity() : std::stod(rest);
    if (!(p >= 1.0)) bad();
    return HardySpace{p};
  }
  if (family == "bergman") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) bad();
    double p = std::stod(rest.substr(0, c2));
    if (!(p >= 1.0) || std::isinf(p)) bad();
    std::string wdesc = rest.substr(c2 + 1);
    if (wdesc.rfind("beta:", 0) == 0)
      return BergmanSpace{p, RadialWeight::power(std::stod(wdesc.substr(5)))};
    if (wdesc.rfind("table:", 0) == 0)
      return BergmanSpace{p, RadialWeight::from_table(wdesc.substr(6))};
    bad();
  }
  bad();
  return HardySpace{2.0};  // unreachable
}

namespace {

void require_analytic_past_circle(const RationalFunction& f) {
  if (!f.terms().empty() && f.min_pole_modulus() <= 1.0)
    throw std::domain_error("function has a pole on or inside the closed unit disc");
}

// Chooses a truncation K and returns Taylor coefficients with a geometric
// tail envelope rate rho_g strictly between the true decay rate and 1.
struct SeriesCut {
  std::vector<Complex> coeffs;
  double rho_g;
};

SeriesCut series_cut(const RationalFunction& f, double tail_tol) {
  double rho = f.coeff_decay_rate();
  if (f.is_polynomial() || f.terms().empty()) {
    return {f.taylor_coeffs(std::max(0, f.degree())), 0.0};
  }
  double rho_g = 0.5 * (1.0 + rho);
  int K = std::max({64, 4 * f.degree(),
                    static_cast<int>(std::log(tail_tol) / std::log(rho_g)) + 4 * f.degree()});
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto c = f.taylor_coeffs(K);
    double cmax = 0.0;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    // envelope check over the last stretch of coefficients, relative to the
    // largest coefficient
    double tail_term = 0.0;
    bool decaying = true;
    for (int k = K - 10; k < K; ++k) {
      double m = std::abs(c[k]);
      tail_term = std::max(tail_term, m);
      if (k > K - 10 && std::abs(c[k]) > std::abs(c[k - 1]) * (1.0 + 1e-12) + tail_tol * cmax)
        decaying = false;
    }
    if (decaying && tail_term <= tail_tol * std::max(1e-300, cmax))
      return {std::move(c), rho_g};
    K *= 2;
  }
  throw std::runtime_error("series truncation did not reach the requested tail tolerance");
}

}  // namespace

NormResult hardy_norm(const RationalFunction& f, double p,
                      const QuadratureSpec& spec) {
  if (!(p >= 1.0)) throw std::invalid_argument("hardy_norm: p < 1");
  require_analytic_past_circle(f);
  validate(spec);
  NormResult out;
  out.grid = spec;
  out.method = NormMethod::quadrature;
  if (std::isinf(p)) {
    auto grid_max = [&](int N) {
      double m = 0.0;
      for (int j = 0; j < N; ++j) {
        double th = 2.0 * std::numbers::pi * j / N;
        m = std::max(m, std::abs(f.eval(Complex{std::cos(th), std::sin(th)})));
      }
      return m;
    };
    int N = spec.angular_points;
    double m1 = grid_max(N);
    double m2 = grid_max(2 * N);
    // pad by the worst inter-node variation, |f'| bounding the modulus of
    // continuity along the circle
    RationalFunction df = f.derivative();
    double dmax = 0.0;
    for (int j = 0; j < N; ++j) {
      double th = 2.0 * std::numbers::pi * j / N;
      dmax = std::max(dmax, std::abs(df.eval(Complex{std::cos(th), std::sin(th)})));
    }
    out.value = m2;
    out.error_estimate = std::abs(m2 - m1) + dmax * std::numbers::pi / N;
    return out;
  }
  auto res = integrate_circle_adaptive(
      [&](Complex zeta) { return std::pow(std::abs(f.eval(zeta)), p); },
      spec.angular_points, spec.tolerance);
  out.value = std::pow(res.value, 1.0 / p);
  out.error_estimate =
      (res.value > 0.0) ? res.error_estimate / (p * std::pow(res.value, 1.0 - 1.0 / p)) : 0.0;
  return out;
}

NormResult hardy2_norm_series(const RationalFunction& f, double tail_tol) {
  require_analytic_past_circle(f);
  auto cut = series_cut(f, tail_tol);
  double sum = 0.0;
  double last = 0.0;
  for (const auto& c : cut.coeffs) {
    last = std::norm(c);
    sum += last;
  }
  NormResult out;
  out.method = NormMethod::series;
  out.value = std::sqrt(sum);
  double rho2 = cut.rho_g * cut.rho_g;
  double tail = (rho2 > 0.0) ? last * rho2 / (1.0 - rho2) : 0.0;
  out.error_estimate = (out.value > 0.0) ? tail / (2.0 * out.value) : std::sqrt(tail);
  return out;
}

NormResult bergman_norm(const RationalFunction& f, double p,
                        const RadialWeight& w, const QuadratureSpec& spec) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::invalid_argument("bergman_norm: p outside [1, inf)");
  require_analytic_past_circle(f);
  QuadratureSpec full = spec;
  full.annulus_alpha = 0.0;
  auto res = integrate_annulus(
      [&](Complex z) { return std::pow(std::abs(f.eval(z)), p); }, w, full);
  NormResult out;
  out.grid = spec;
  out.method = NormMethod::quadrature;
  out.value = std::pow(res.value, 1.0 / p);
  out.error_estimate =
      (res.value > 0.0) ? res.error_estimate / (p * std::pow(res.value, 1.0 - 1.0 / p)) : 0.0;
  return out;
}

NormResult bergman2_norm_series(const RationalFunction& f, const RadialWeight& w,
                                double tail_tol) {
  require_analytic_past_circle(f);
  auto cut = series_cut(f, tail_tol);
  double sum = 0.0;
  double last = 0.0;
  for (size_t k = 0; k < cut.coeffs.size(); ++k) {
    last = std::norm(cut.coeffs[k]) * w.moment(2.0 * static_cast<double>(k));
    sum += last;
  }
  NormResult out;
  out.method = NormMethod::series;
  out.value = std::sqrt(sum);
  double rho2 = cut.rho_g * cut.rho_g;
  double tail = (rho2 > 0.0) ? last * rho2 / (1.0 - rho2) : 0.0;
  out.error_estimate = (out.value > 0.0) ? tail / (2.0 * out.value) : std::sqrt(tail);
  return out;
}

NormResult space_norm(const RationalFunction& f, const SpaceDescriptor& space,
                      const QuadratureSpec& spec, bool prefer_series) {
  if (std::holds_alternative<HardySpace>(space)) {
    double p = std::get<HardySpace>(space).p;
    if (prefer_series && p == 2.0) return hardy2_norm_series(f);
    return hardy_norm(f, p, spec);
  }
  const auto& b = std::get<BergmanSpace>(space);
  if (prefer_series && b.p == 2.0) return bergman2_norm_series(f, b.weight);
  return bergman_norm(f, b.p, b.weight, spec);
}

}  // namespace bern

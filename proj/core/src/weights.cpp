#include "bern/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bern/quadrature.hpp"

namespace bern {

RadialWeight RadialWeight::power(double beta) {
  if (!(beta > -1.0 && beta <= 50.0))
    throw std::invalid_argument("power weight: beta outside (-1, 50]");
  RadialWeight w;
  w.is_power_ = true;
  w.beta_ = beta;
  w.gamma_ = beta + 1.0;  // default growth witness for w_beta
  w.r0_ = 0.0;
  w.label_ = "beta:" + std::to_string(beta);
  return w;
}

RadialWeight RadialWeight::custom(std::function<double(double)> evaluator,
                                  std::optional<double> gamma,
                                  std::optional<double> r0) {
  RadialWeight w;
  w.eval_ = std::move(evaluator);
  w.gamma_ = gamma;
  w.r0_ = r0;
  w.label_ = "custom";
  // Validation grid: nonnegativity and a finite integral.
  double integral = 0.0;
  for (int i = 1; i < 128; ++i) {
    double rho = i / 128.0;
    double v = w.eval_(rho);
    if (!(v >= 0.0))
      throw std::invalid_argument("custom weight is negative or NaN at rho = " +
                                  std::to_string(rho));
    integral += v / 128.0;
  }
  if (!std::isfinite(integral))
    throw std::invalid_argument("custom weight has a non-integrable grid sum");
  return w;
}

RadialWeight RadialWeight::from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight table: " + path);
  std::vector<std::pair<double, double>> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double rho, v;
    if (ss >> rho >> v) pts.emplace_back(rho, v);
  }
  if (pts.size() < 2) throw std::runtime_error("weight table needs at least two rows: " + path);
  std::sort(pts.begin(), pts.end());
  auto w = custom([pts](double rho) {
    if (rho <= pts.front().first) return pts.front().second;
    if (rho >= pts.back().first) return pts.back().second;
    auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(rho, 0.0));
    auto lo = std::prev(it);
    double t = (rho - lo->first) / (it->first - lo->first);
    return (1.0 - t) * lo->second + t * it->second;
  });
  w.label_ = "table:" + path;
  return w;
}

double RadialWeight::operator()(double rho) const {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("weight evaluation outside (0,1)");
  if (is_power_) return std::pow(1.0 - rho * rho, beta_) * rho;
  return eval_(rho);
}

double RadialWeight::beta() const {
  if (!is_power_) throw std::logic_error("beta() on a non-power weight");
  return beta_;
}

double RadialWeight::moment(double s) const {
  if (!(s >= 0.0)) throw std::invalid_argument("moment: s < 0");
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->values.find(s);
    if (it != cache_->values.end()) return it->second;
  }
  double v;
  if (is_power_) {
    // integral_0^1 (1-rho^2)^beta rho^{s+1} drho = (1/2) B(s/2 + 1, beta + 1)
    v = 0.5 * std::exp(std::lgamma(s / 2.0 + 1.0) + std::lgamma(beta_ + 1.0) -
                       std::lgamma(s / 2.0 + beta_ + 2.0));
  } else {
    auto res = integrate_radial(
        [this, s](double rho) { return eval_(rho) * std::pow(rho, s); },
        GaussLegendreRule{8, 32}, 0.0, 1e-12);
    v = res.value;
  }
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->values[s] = v;
  return v;
}

std::string RadialWeight::describe() const { return label_; }

GrowthCheck validate_growth(const RadialWeight& w, double gamma, double r0,
                            int gridsize) {
  if (!(r0 >= 0.0 && r0 < 1.0)) throw std::invalid_argument("validate_growth: r0 outside [0,1)");
  if (gridsize < 2) throw std::invalid_argument("validate_growth: gridsize < 2");
  // Geometric grid refined toward 1: rho_i = 1 - (1-r0) 2^{-i/16}.
  double prev_val = -1.0;
  for (int i = 0; i < gridsize; ++i) {
    double rho = 1.0 - (1.0 - r0) * std::pow(2.0, -i / 16.0);
    if (rho <= 0.0) rho = 1e-12;
    double v = std::pow(1.0 - rho, -gamma) * w(rho);
    if (i > 0 && v < prev_val * (1.0 - 1e-12)) {
      return {false, rho, prev_val - v};
    }
    prev_val = v;
  }
  return {true, 0.0, 0.0};
}

}  // namespace bern

#ifndef BERN_WEIGHTS_HPP
#define BERN_WEIGHTS_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <map>
#include <optional>
#include <string>

namespace bern {

// Radial weight w(rho) on (0,1), nonnegative and integrable.
// The power family is w_beta(rho) = (1-rho^2)^beta * rho, beta > -1.
class RadialWeight {
 public:
  static RadialWeight power(double beta);
  static RadialWeight custom(std::function<double(double)> evaluator,
                             std::optional<double> gamma = std::nullopt,
                             std::optional<double> r0 = std::nullopt);
  // CSV table of "rho,w" rows, linearly interpolated.
  static RadialWeight from_table(const std::string& path);

  double operator()(double rho) const;

  bool is_power() const { return is_power_; }
  double beta() const;
  std::optional<double> declared_gamma() const { return gamma_; }
  std::optional<double> declared_r0() const { return r0_; }

  // integral_0^1 w(rho) rho^s drho, s >= 0. Exact Beta-function form for the
  // power family, radial quadrature otherwise. Cached per s.
  double moment(double s) const;

  std::string describe() const;

 private:
  RadialWeight() = default;

  bool is_power_ = false;
  double beta_ = 0.0;
  std::function<double(double)> eval_;
  std::optional<double> gamma_;
  std::optional<double> r0_;
  std::string label_;

  struct Cache {
    std::mutex mu;
    std::map<double, double> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct GrowthCheck {
  bool ok;
  double violation_rho;   // meaningful only when !ok
  double violation_drop;  // size of the decrease at the violation
};

// Checks that rho -> (1-rho)^{-gamma} w(rho) is nondecreasing on a geometric
// grid refined toward 1, restricted to [r0, 1).
GrowthCheck validate_growth(const RadialWeight& w, double gamma, double r0,
                            int gridsize = 256);

}  // namespace bern

#endif

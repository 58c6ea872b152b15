#ifndef BERN_NORMS_HPP
#define BERN_NORMS_HPP

#include <string>
#include <variant>

#include "bern/quadrature.hpp"
#include "bern/rational.hpp"
#include "bern/weights.hpp"

namespace bern {

struct HardySpace {
  double p;  // in [1, inf]; use std::numeric_limits<double>::infinity() for sup norm
};

struct BergmanSpace {
  double p;  // in [1, inf)
  RadialWeight weight;
};

using SpaceDescriptor = std::variant<HardySpace, BergmanSpace>;

std::string describe(const SpaceDescriptor& space);
SpaceDescriptor parse_space(const std::string& descriptor);

enum class NormMethod { quadrature, series };

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::quadrature;
  double error_estimate = 0.0;
  QuadratureSpec grid;
};

// Boundary L^p integral; valid because R_{n,r} functions extend analytically
// past the unit circle. p = inf takes an angular grid max with a
// derivative-based pad in the error estimate.
NormResult hardy_norm(const RationalFunction& f, double p,
                      const QuadratureSpec& spec = {});

// sqrt(sum |f_hat(k)|^2) with a geometric tail cutoff.
NormResult hardy2_norm_series(const RationalFunction& f, double tail_tol = 1e-12);

NormResult bergman_norm(const RationalFunction& f, double p,
                        const RadialWeight& w, const QuadratureSpec& spec = {});

// sqrt(sum |f_hat(k)|^2 moment(w, 2k)).
NormResult bergman2_norm_series(const RationalFunction& f, const RadialWeight& w,
                                double tail_tol = 1e-12);

// Dispatch on the space descriptor; prefer_series routes p = 2 through the
// series paths.
NormResult space_norm(const RationalFunction& f, const SpaceDescriptor& space,
                      const QuadratureSpec& spec = {}, bool prefer_series = false);

}  // namespace bern

#endif

#pragma once

#include <cmath>
#include <string>

#include "npo/error.hpp"

namespace npo {

// Algebraic map r(x) = L (1+x) / (1-x+alpha) from [-1,1] onto [0, r_max].
// L and alpha are tied by alpha = 2L / r_max so that r(1) = r_max. Small L
// crowds nodes toward the origin; large L makes the map nearly linear.
class MappingSpec {
 public:
  // Fixes alpha, derives L = alpha r_max / 2.
  MappingSpec(double alpha, double r_max) : alpha_(alpha), r_max_(r_max) {
    check_positive(alpha, "alpha");
    check_positive(r_max, "r_max");
    scale_ = alpha * r_max / 2.0;
  }

  static MappingSpec from_alpha(double alpha, double r_max) {
    return MappingSpec(alpha, r_max);
  }

  // Fixes L, derives alpha = 2L / r_max.
  static MappingSpec from_scale(double scale, double r_max) {
    check_positive(scale, "scale");
    check_positive(r_max, "r_max");
    MappingSpec m(2.0 * scale / r_max, r_max);
    m.scale_ = scale;
    return m;
  }

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double r_max() const { return r_max_; }
  [[nodiscard]] double scale() const { return scale_; }

  [[nodiscard]] double r(double x) const {
    return scale_ * (1.0 + x) / (1.0 - x + alpha_);
  }

  // dr/dx
  [[nodiscard]] double jacobian(double x) const {
    const double d = 1.0 - x + alpha_;
    return scale_ * (2.0 + alpha_) / (d * d);
  }

  [[nodiscard]] double x_of_r(double r) const {
    return (r * (1.0 + alpha_) - scale_) / (r + scale_);
  }

  friend bool operator==(const MappingSpec&, const MappingSpec&) = default;

 private:
  static void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError(std::string("MappingSpec: ") + name +
                        " must be positive and finite");
  }

  double alpha_;
  double r_max_;
  double scale_;
};

inline double map_r(double x, const MappingSpec& spec) { return spec.r(x); }

inline double map_jacobian(double x, const MappingSpec& spec) {
  return spec.jacobian(x);
}

}  // namespace npo

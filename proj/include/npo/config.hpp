#pragma once

#include <optional>

#include "npo/mapping.hpp"

namespace npo {

inline constexpr int kDefaultOrder = 200;
inline constexpr double kDefaultScale = 5.0;
inline constexpr double kDefaultRmax = 150.0;
inline constexpr double kHighLyingRmax = 300.0;

// Discretization knobs shared by every solve.
struct SolverConfig {
  int order = kDefaultOrder;
  double scale = kDefaultScale;  // mapping L, used unless alpha is set
  std::optional<double> alpha;   // fixes alpha directly (L = alpha r_max / 2)
  double r_max = kDefaultRmax;

  [[nodiscard]] MappingSpec mapping() const {
    return alpha ? MappingSpec::from_alpha(*alpha, r_max)
                 : MappingSpec::from_scale(scale, r_max);
  }

  [[nodiscard]] SolverConfig with_r_max(double r) const {
    SolverConfig c = *this;
    c.r_max = r;
    return c;
  }

  static SolverConfig high_lying() {
    SolverConfig c;
    c.r_max = kHighLyingRmax;
    return c;
  }
};

}  // namespace npo

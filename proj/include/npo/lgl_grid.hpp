#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "npo/error.hpp"

namespace npo {

struct LegendreValue {
  double p;   // P_N(x)
  double dp;  // P'_N(x)
};

// P_N and P'_N by the three-term recurrence. The derivative uses
// P'_{k+1} = P'_{k-1} + (2k+1) P_k, which stays finite at x = +-1.
inline LegendreValue legendre_eval(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0, p = x;
  double dp_prev = 0.0, dp = 1.0;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    const double dp_next = dp_prev + (2.0 * k + 1.0) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

// Legendre-Gauss-Lobatto nodes: -1, +1 and the N-1 roots of P'_N.
struct LglGrid {
  int order = 0;
  std::vector<double> nodes;        // ascending, size N+1
  std::vector<double> weights;      // 2 / (N(N+1) P_N(x_j)^2)
  std::vector<double> pn_at_nodes;  // P_N(x_j)

  [[nodiscard]] int size() const { return order + 1; }
};

namespace detail {

// Newton on P'_N, with P''_N from the Legendre ODE.
inline double polish_lobatto_root(int n, double x, int index) {
  const double nn1 = static_cast<double>(n) * (n + 1);
  for (int it = 0; it < 100; ++it) {
    const auto [p, dp] = legendre_eval(n, x);
    const double d2p = (2.0 * x * dp - nn1 * p) / (1.0 - x * x);
    const double dx = dp / d2p;
    x -= dx;
    if (std::abs(dx) < 1e-15) return x;
  }
  throw ConvergenceError("lgl_nodes: Newton iteration for interior node " +
                         std::to_string(index) + " of order " +
                         std::to_string(n) + " did not converge");
}

}  // namespace detail

inline LglGrid lgl_nodes(int n) {
  if (n < 2) throw DomainError("lgl_nodes: order must be >= 2");

  LglGrid grid;
  grid.order = n;
  grid.nodes.assign(n + 1, 0.0);
  grid.nodes.front() = -1.0;
  grid.nodes.back() = 1.0;

  // Solve the lower half and mirror so the node set is exactly symmetric.
  for (int j = 1; j <= n / 2; ++j) {
    const double guess = -std::cos(std::numbers::pi * j / n);
    const double x =
        (2 * j == n) ? 0.0 : detail::polish_lobatto_root(n, guess, j);
    grid.nodes[j] = x;
    grid.nodes[n - j] = -x;
  }

  const double nn1 = static_cast<double>(n) * (n + 1);
  grid.weights.resize(n + 1);
  grid.pn_at_nodes.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double p = legendre_eval(n, grid.nodes[j]).p;
    grid.pn_at_nodes[j] = p;
    grid.weights[j] = 2.0 / (nn1 * p * p);
  }
  return grid;
}

}  // namespace npo

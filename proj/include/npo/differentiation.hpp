#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "npo/error.hpp"
#include "npo/lgl_grid.hpp"
#include "npo/mapping.hpp"

namespace npo {

// First-derivative collocation matrix of the LGL cardinal functions,
// d1(i, j) = g_j'(x_i).
inline Eigen::MatrixXd cardinal_d1(const LglGrid& grid) {
  const int n = grid.order;
  const auto& x = grid.nodes;
  const auto& p = grid.pn_at_nodes;
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i != j) d1(i, j) = p[i] / p[j] / (x[i] - x[j]);
    }
  }
  const double corner = static_cast<double>(n) * (n + 1) / 4.0;
  d1(0, 0) = -corner;
  d1(n, n) = corner;
  return d1;
}

// Discrete -1/2 d^2/dr^2 on the mapped grid with Dirichlet conditions at
// r = 0 and r = r_max.
//
// With psi(r) expanded in cardinal functions, the kinetic form
// 1/2 int |psi'|^2 dr = 1/2 int (dpsi/dx)^2 / r' dx is evaluated by LGL
// quadrature, and the norm int psi^2 dr = sum_j w_j r'_j psi_j^2 is diagonal.
// In the amplitudes A_j = sqrt(w_j r'_j) psi_j (proportional to
// sqrt(r'_j) psi_j / P_N(x_j)) the problem is a standard symmetric one:
//   K(i, j) = 1/2 sum_k G(k, i) G(k, j),
//   G(k, j) = sqrt(w_k / r'_k) d1(k, j) / sqrt(w_j r'_j),
// where k runs over all N+1 quadrature nodes and i, j over the interior.
class CollocationOperator {
 public:
  CollocationOperator(LglGrid grid, MappingSpec mapping)
      : grid_(std::move(grid)), mapping_(mapping) {
    const int n = grid_.order;
    d1_ = cardinal_d1(grid_);

    radii_.resize(n + 1);
    jacobians_.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      radii_[j] = mapping_.r(grid_.nodes[j]);
      jacobians_[j] = mapping_.jacobian(grid_.nodes[j]);
      if (!(jacobians_[j] > 0.0) || !std::isfinite(jacobians_[j]))
        throw DomainError("CollocationOperator: singular mapping Jacobian");
    }
    build_kinetic();
  }

  [[nodiscard]] const LglGrid& grid() const { return grid_; }
  [[nodiscard]] const MappingSpec& mapping() const { return mapping_; }
  [[nodiscard]] int order() const { return grid_.order; }
  // Number of interior nodes, the dimension of every assembled Hamiltonian.
  [[nodiscard]] int interior_size() const { return grid_.order - 1; }

  [[nodiscard]] const Eigen::MatrixXd& d1() const { return d1_; }
  [[nodiscard]] const Eigen::MatrixXd& kinetic() const { return kinetic_; }

  // r(x_j) and r'(x_j) for all N+1 nodes.
  [[nodiscard]] const std::vector<double>& radii() const { return radii_; }
  [[nodiscard]] const std::vector<double>& jacobians() const {
    return jacobians_;
  }

  // Radius of interior node i (0-based over interior, i.e. node i+1).
  [[nodiscard]] double interior_radius(int i) const { return radii_[i + 1]; }

  // sqrt(w_j r'_j) for interior node i: converts psi_j to amplitude A_j.
  [[nodiscard]] double amplitude_scale(int i) const {
    return std::sqrt(grid_.weights[i + 1] * jacobians_[i + 1]);
  }

 private:
  void build_kinetic() {
    const int n = grid_.order;
    const int m = n - 1;
    Eigen::MatrixXd g(n + 1, m);
    for (int k = 0; k <= n; ++k) {
      const double row = std::sqrt(grid_.weights[k] / jacobians_[k]);
      for (int j = 0; j < m; ++j)
        g(k, j) = row * d1_(k, j + 1) / amplitude_scale(j);
    }
    kinetic_.resize(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += g(k, i) * g(k, j);
        kinetic_(i, j) = 0.5 * s;
        kinetic_(j, i) = 0.5 * s;
      }
    }
  }

  LglGrid grid_;
  MappingSpec mapping_;
  Eigen::MatrixXd d1_;
  Eigen::MatrixXd kinetic_;
  std::vector<double> radii_;
  std::vector<double> jacobians_;
};

inline Eigen::MatrixXd kinetic_matrix(const CollocationOperator& op) {
  return op.kinetic();
}

inline std::shared_ptr<const CollocationOperator> make_operator(
    int order, const MappingSpec& mapping) {
  return std::make_shared<const CollocationOperator>(lgl_nodes(order),
                                                     mapping);
}

}  // namespace npo

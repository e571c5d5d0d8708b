#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include <Eigen/Dense>

#include "npo/differentiation.hpp"
#include "npo/error.hpp"

namespace npo {

// Coupling pair of V(r) = r^2 + lambda r^2 / (1 + g r^2).
struct PotentialParams {
  double g = 1.0;
  double lambda = 0.0;

  PotentialParams() = default;
  PotentialParams(double g_, double lambda_) : g(g_), lambda(lambda_) {
    if (!(g > 0.0) || !std::isfinite(g))
      throw DomainError("PotentialParams: g must be positive and finite");
    if (!std::isfinite(lambda))
      throw DomainError("PotentialParams: lambda must be finite");
  }

  friend bool operator==(const PotentialParams&,
                         const PotentialParams&) = default;
};

inline double potential_npo(double r, const PotentialParams& params) {
  const double r2 = r * r;
  return r2 + params.lambda * r2 / (1.0 + params.g * r2);
}

// Callable V(r) wrapper so the NPO plugs into the generic assembly path.
struct NpoPotential {
  PotentialParams params;
  double operator()(double r) const { return potential_npo(r, params); }
};

struct HarmonicPotential {
  double operator()(double r) const { return r * r; }
};

template <class F>
concept RadialPotential = std::regular_invocable<const F&, double> &&
    std::convertible_to<std::invoke_result_t<const F&, double>, double>;

// One l-channel of the NPO on a given discretization.
struct RadialProblem {
  PotentialParams params;
  int l = 0;
  int order = 200;
  MappingSpec mapping{25.0, 150.0};
};

// v(r_j) + l(l+1)/(2 r_j^2) at the interior nodes, with v = V/2.
template <RadialPotential Potential>
Eigen::VectorXd effective_diagonal(const CollocationOperator& op, int l,
                                   const Potential& potential) {
  if (l < 0) throw DomainError("effective_diagonal: l must be >= 0");
  const int m = op.interior_size();
  const double centrifugal = 0.5 * static_cast<double>(l) * (l + 1);
  Eigen::VectorXd diag(m);
  for (int i = 0; i < m; ++i) {
    const double r = op.interior_radius(i);
    if (!(r > 0.0))
      throw DomainError("effective_diagonal: interior node at r = 0");
    diag(i) = 0.5 * potential(r) + centrifugal / (r * r);
  }
  return diag;
}

inline void check_compatible(const RadialProblem& problem,
                             const CollocationOperator& op) {
  if (problem.order != op.order() || !(problem.mapping == op.mapping()))
    throw DomainError("assemble: problem grid (N=" +
                      std::to_string(problem.order) +
                      ") does not match operator grid (N=" +
                      std::to_string(op.order()) + ")");
}

inline Eigen::VectorXd effective_diagonal(const RadialProblem& problem,
                                          const CollocationOperator& op) {
  check_compatible(problem, op);
  return effective_diagonal(op, problem.l, NpoPotential{problem.params});
}

template <RadialPotential Potential>
Eigen::MatrixXd assemble(const CollocationOperator& op, int l,
                         const Potential& potential) {
  Eigen::MatrixXd h = op.kinetic();
  h.diagonal() += effective_diagonal(op, l, potential);
  return h;
}

// Symmetric Hamiltonian whose eigenvalues are E (not 2E).
inline Eigen::MatrixXd assemble(const RadialProblem& problem,
                                const CollocationOperator& op) {
  check_compatible(problem, op);
  return assemble(op, problem.l, NpoPotential{problem.params});
}

}  // namespace npo

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "npo/error.hpp"

namespace npo {

// Where a spectrum came from. Left at defaults for bare matrix solves.
struct SolutionMeta {
  double g = 0.0;
  double lambda = 0.0;
  int l = 0;
  int order = 0;
  double alpha = 0.0;
  double r_max = 0.0;
};

struct EigenSolution {
  Eigen::VectorXd values;   // ascending, E convention
  Eigen::MatrixXd vectors;  // column k belongs to values(k)
  SolutionMeta meta;

  [[nodiscard]] int size() const { return static_cast<int>(values.size()); }
  [[nodiscard]] int vector_count() const {
    return static_cast<int>(vectors.cols());
  }
};

inline constexpr double kSymmetryTolerance = 1e-11;

// max|H - H^T| / max|H|
inline double symmetry_defect(const Eigen::MatrixXd& h) {
  const double scale = h.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (h - h.transpose()).cwiseAbs().maxCoeff() / scale;
}

namespace detail {

// Rayleigh quotient v^T H v for a unit vector, accumulated in long double.
inline double rayleigh_quotient(const Eigen::MatrixXd& h,
                                const Eigen::Ref<const Eigen::VectorXd>& v) {
  long double num = 0.0L;
  long double den = 0.0L;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    long double hv = 0.0L;
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      hv += static_cast<long double>(h(i, j)) * v(j);
    num += hv * v(i);
    den += static_cast<long double>(v(i)) * v(i);
  }
  return static_cast<double>(num / den);
}

}  // namespace detail

// Full spectrum of a dense real symmetric matrix, with eigenvectors for the
// lowest `vector_count` states (all when empty). Each eigenvector is signed
// so that its largest-magnitude component is positive.
//
// Eigenvalues that come with an eigenvector are polished by an extended
// precision Rayleigh quotient. The error is second order in the eigenvector
// error, so this removes most of the O(eps ||H||) rounding of the QR sweep.
inline EigenSolution eigh_symmetric(
    const Eigen::MatrixXd& h, std::optional<int> vector_count = std::nullopt) {
  if (h.rows() != h.cols())
    throw DomainError("eigh_symmetric: matrix is not square");
  if (!h.allFinite())
    throw DomainError("eigh_symmetric: matrix has non-finite entries");
  const double defect = symmetry_defect(h);
  if (defect > kSymmetryTolerance)
    throw DomainError("eigh_symmetric: matrix is not symmetric (defect " +
                      std::to_string(defect) + ")");

  const int n = static_cast<int>(h.rows());
  const int keep = vector_count ? std::clamp(*vector_count, 0, n) : n;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, keep > 0 ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError(
        "eigh_symmetric: tridiagonal QR iteration failed to converge for a " +
        std::to_string(h.rows()) + "x" + std::to_string(h.rows()) +
        " matrix");

  EigenSolution out;
  out.values = solver.eigenvalues();
  if (keep > 0) out.vectors = solver.eigenvectors().leftCols(keep);
  else out.vectors.resize(n, 0);
  for (int k = 0; k < keep; ++k) {
    Eigen::Index imax = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&imax);
    if (out.vectors(imax, k) < 0.0) out.vectors.col(k) *= -1.0;
  }
  for (int k = 0; k < keep; ++k) {
    const double polished = detail::rayleigh_quotient(h, out.vectors.col(k));
    const bool ordered =
        (k == 0 || polished >= out.values(k - 1)) &&
        (k + 1 >= n || polished <= out.values(k + 1));
    if (ordered) out.values(k) = polished;
  }
  return out;
}

}  // namespace npo

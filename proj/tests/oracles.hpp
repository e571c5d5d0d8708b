#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace npo::oracle {

// Householder reduction of symmetric `a` to tridiagonal form (diagonal
// `d`, off-diagonal `e`), carried out in long double.
inline void tridiagonalize(const Eigen::MatrixXd& a, std::vector<long double>& d,
                           std::vector<long double>& e) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  for (int k = 0; k + 2 < n; ++k) {
    long double alpha = 0.0L;
    for (int i = k + 1; i < n; ++i) alpha += m[i][k] * m[i][k];
    alpha = std::sqrt(alpha);
    if (alpha == 0.0L) continue;
    if (m[k + 1][k] > 0) alpha = -alpha;
    std::vector<long double> v(n, 0.0L);
    v[k + 1] = m[k + 1][k] - alpha;
    for (int i = k + 2; i < n; ++i) v[i] = m[i][k];
    long double vv = 0.0L;
    for (int i = k + 1; i < n; ++i) vv += v[i] * v[i];
    if (vv == 0.0L) continue;
    // m <- (I - 2 v v^T / vv) m (I - 2 v v^T / vv)
    std::vector<long double> p(n, 0.0L);
    for (int i = 0; i < n; ++i)
      for (int j = k + 1; j < n; ++j) p[i] += m[i][j] * v[j];
    long double vp = 0.0L;
    for (int i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const long double beta = 2.0L / vv;
    for (int i = 0; i < n; ++i) {
      const long double qi = beta * (p[i] - beta * vp * v[i] / 2.0L);
      for (int j = 0; j < n; ++j) {
        const long double qj = beta * (p[j] - beta * vp * v[j] / 2.0L);
        m[i][j] -= v[i] * qj + qi * v[j];
      }
    }
  }
  d.assign(n, 0.0L);
  e.assign(n > 0 ? n - 1 : 0, 0.0L);
  for (int i = 0; i < n; ++i) d[i] = m[i][i];
  for (int i = 0; i + 1 < n; ++i) e[i] = m[i + 1][i];
}

// Number of eigenvalues of the tridiagonal (d, e) below `shift`: negative
// pivots of the LDL^T factorization of T - shift I (Sylvester's inertia).
inline int count_below(const std::vector<long double>& d,
                       const std::vector<long double>& e, long double shift) {
  constexpr long double tiny = 1e-300L;
  int negative = 0;
  long double q = 1.0L;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = d[i] - shift - (i > 0 ? e[i - 1] * e[i - 1] / q : 0.0L);
    if (std::abs(q) < tiny) q = -tiny;
    if (q < 0.0L) ++negative;
  }
  return negative;
}

// All eigenvalues by bisection on the inertia count, ascending.
inline std::vector<double> bisection_eigenvalues(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  // Gershgorin bounds.
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a(i, j));
    lo = std::min(lo, a(i, i) - radius);
    hi = std::max(hi, a(i, i) + radius);
  }
  std::vector<long double> d, e;
  tridiagonalize(a, d, e);
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    long double a_lo = lo - 1.0, a_hi = hi + 1.0;
    for (int it = 0; it < 200; ++it) {
      const long double mid = 0.5L * (a_lo + a_hi);
      if (mid == a_lo || mid == a_hi) break;
      if (count_below(d, e, mid) > k)
        a_hi = mid;
      else
        a_lo = mid;
    }
    out[k] = static_cast<double>(0.5L * (a_lo + a_hi));
  }
  return out;
}

inline Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

// P'_n(x) by the three-term recurrence in extended precision.
inline long double legendre_dp_long(int n, long double x) {
  long double p0 = 1, p1 = x, d0 = 0, d1 = 1;
  if (n == 0) return 0;
  for (int k = 1; k < n; ++k) {
    const long double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    const long double d2 = d0 + (2 * k + 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

// 3D isotropic oscillator V = r^2 in the 2E convention.
inline double harmonic_two_e(int n_r, int l) { return 4.0 * n_r + 2.0 * l + 3.0; }

// Normalized ground state of the l = 0 oscillator, psi = 2 pi^{-1/4} r e^{-r^2/2}.
inline double harmonic_ground_psi(double r) {
  return 2.0 * std::pow(std::numbers::pi, -0.25) * r * std::exp(-0.5 * r * r);
}

// Fourth-order central difference of f at x with step h.
template <class F>
double five_point_difference(const F& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace npo::oracle

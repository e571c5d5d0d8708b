#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "npo/differentiation.hpp"
#include "npo/eigensolver.hpp"
#include "npo/error.hpp"
#include "npo/hamiltonian.hpp"
#include "npo/labels.hpp"

namespace npo {

// Reduced radial function psi = r R on the interior collocation nodes,
// normalized so that sum_j w_j r'_j psi_j^2 = 1.
struct RadialWavefunction {
  StateLabel state;
  PotentialParams params;
  std::shared_ptr<const CollocationOperator> op;
  std::vector<double> radii;  // interior nodes
  std::vector<double> psi;
  double norm_defect = 0.0;
};

struct DensitySample {
  double r;
  double density;  // |psi(r)|^2 = |r R(r)|^2
};

struct RadialDensity {
  StateLabel state;
  PotentialParams params;
  std::vector<DensitySample> samples;
  double norm_defect = 0.0;
};

// Sign changes of psi, ignoring amplitudes below `cutoff` of the maximum.
inline int count_nodes(const std::vector<double>& psi, double cutoff = 1e-9) {
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  int nodes = 0;
  int last_sign = 0;
  for (double v : psi) {
    if (std::abs(v) <= cutoff * peak) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

namespace detail {

// Index of the first local maximum of |psi| that reaches 1e-3 of the global
// maximum; tiny wiggles in the tail do not count.
inline std::size_t first_peak(const std::vector<double>& psi) {
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  const double floor = 1e-3 * peak;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double a = std::abs(psi[i]);
    if (a < floor) continue;
    const double next = i + 1 < psi.size() ? std::abs(psi[i + 1]) : 0.0;
    if (a >= next) return i;
  }
  return 0;
}

}  // namespace detail

// psi_j = A_j / sqrt(w_j r'_j). Equivalent to A_j P_N(x_j) / sqrt(r'_j) up to
// the constant sqrt(2 / (N(N+1))), which the normalization absorbs.
inline RadialWavefunction reconstruct_wavefunction(
    std::shared_ptr<const CollocationOperator> op,
    const EigenSolution& solution, int index, const PotentialParams& params,
    int l) {
  if (!op) throw DomainError("reconstruct_wavefunction: null operator");
  if (index < 0 || index >= solution.vector_count())
    throw DomainError("reconstruct_wavefunction: eigenvector " +
                      std::to_string(index) + " not available");
  const int m = op->interior_size();
  if (solution.vectors.rows() != m)
    throw DomainError("reconstruct_wavefunction: dimension mismatch");

  RadialWavefunction wf;
  wf.state = {index, l};
  wf.params = params;
  wf.radii.resize(m);
  wf.psi.resize(m);
  double norm = 0.0;
  for (int i = 0; i < m; ++i) {
    wf.radii[i] = op->interior_radius(i);
    const double scale = op->amplitude_scale(i);
    wf.psi[i] = solution.vectors(i, index) / scale;
    norm += scale * scale * wf.psi[i] * wf.psi[i];
  }
  const double inv = 1.0 / std::sqrt(norm);
  for (double& v : wf.psi) v *= inv;

  double check = 0.0;
  for (int i = 0; i < m; ++i) {
    const double scale = op->amplitude_scale(i);
    check += scale * scale * wf.psi[i] * wf.psi[i];
  }
  wf.norm_defect = std::abs(check - 1.0);

  if (wf.psi[detail::first_peak(wf.psi)] < 0.0)
    for (double& v : wf.psi) v = -v;
  wf.op = std::move(op);
  return wf;
}

// Quadrature inner product sum_j w_j r'_j a_j b_j.
inline double overlap(const RadialWavefunction& a, const RadialWavefunction& b) {
  if (a.op != b.op || a.psi.size() != b.psi.size())
    throw DomainError("overlap: wavefunctions live on different grids");
  double s = 0.0;
  for (std::size_t i = 0; i < a.psi.size(); ++i) {
    const double scale = a.op->amplitude_scale(static_cast<int>(i));
    s += scale * scale * a.psi[i] * b.psi[i];
  }
  return s;
}

// Norm carried by nodes with r > fraction * r_max.
inline double outer_norm_fraction(const RadialWavefunction& wf,
                                  double fraction = 0.9) {
  const double cut = fraction * wf.op->mapping().r_max();
  double s = 0.0;
  for (std::size_t i = 0; i < wf.psi.size(); ++i) {
    if (wf.radii[i] <= cut) continue;
    const double scale = wf.op->amplitude_scale(static_cast<int>(i));
    s += scale * scale * wf.psi[i] * wf.psi[i];
  }
  return s;
}

// psi(r) from the cardinal interpolant f_N(x) = sum_j f(x_j) g_j(x) with
// f(x_0) = f(x_N) = 0, evaluated in barycentric form (LGL barycentric
// weights are proportional to 1/P_N(x_j)).
inline double interpolate_wavefunction(const RadialWavefunction& wf,
                                       double r) {
  const auto& mapping = wf.op->mapping();
  if (!(r >= 0.0) || r > mapping.r_max())
    throw DomainError("interpolate_wavefunction: r = " + std::to_string(r) +
                      " outside [0, r_max]");
  const auto& grid = wf.op->grid();
  const int n = grid.order;
  const double x = std::clamp(mapping.x_of_r(r), -1.0, 1.0);

  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double f = (j == 0 || j == n) ? 0.0 : wf.psi[j - 1];
    const double dx = x - grid.nodes[j];
    if (dx == 0.0) return f;
    const double t = 1.0 / (grid.pn_at_nodes[j] * dx);
    num += t * f;
    den += t;
  }
  return num / den;
}

inline std::vector<double> uniform_radii(double r_lo, double r_hi,
                                         int count) {
  if (count < 2) throw DomainError("uniform_radii: need at least 2 points");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = r_lo + (r_hi - r_lo) * i / (count - 1);
  out.back() = r_hi;
  return out;
}

inline RadialDensity density_profile(const RadialWavefunction& wf,
                                     const std::vector<double>& radii) {
  RadialDensity out;
  out.state = wf.state;
  out.params = wf.params;
  out.norm_defect = wf.norm_defect;
  out.samples.reserve(radii.size());
  for (double r : radii) {
    const double psi = interpolate_wavefunction(wf, r);
    out.samples.push_back({r, psi * psi});
  }
  return out;
}

struct Peak {
  double r;
  double height;
};

// Global maximum with a parabola through the top sample and its neighbours.
inline Peak find_peak(const std::vector<DensitySample>& samples) {
  if (samples.empty()) throw DomainError("find_peak: no samples");
  std::size_t k = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].density > samples[k].density) k = i;
  if (k == 0 || k + 1 == samples.size())
    return {samples[k].r, samples[k].density};

  const double x0 = samples[k - 1].r, x1 = samples[k].r, x2 = samples[k + 1].r;
  const double y0 = samples[k - 1].density, y1 = samples[k].density,
               y2 = samples[k + 1].density;
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double a = (d12 - d01) / (x2 - x0);
  if (!(a < 0.0)) return {x1, y1};
  const double b = d01 - a * (x0 + x1);
  const double c = y0 - a * x0 * x0 - b * x0;
  const double xp = -b / (2.0 * a);
  return {xp, a * xp * xp + b * xp + c};
}

}  // namespace npo

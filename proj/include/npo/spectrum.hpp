#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "npo/config.hpp"
#include "npo/density.hpp"
#include "npo/differentiation.hpp"
#include "npo/eigensolver.hpp"
#include "npo/hamiltonian.hpp"
#include "npo/labels.hpp"
#include "npo/parallel.hpp"

namespace npo {

// Owns one immutable collocation operator; every (g, lambda, l) solve on the
// same discretization reuses it. Safe to share across threads.
class Solver {
 public:
  explicit Solver(SolverConfig config = {})
      : config_(config), op_(make_operator(config.order, config.mapping())) {}

  [[nodiscard]] const SolverConfig& config() const { return config_; }
  [[nodiscard]] const std::shared_ptr<const CollocationOperator>& op() const {
    return op_;
  }

  // Full l-channel spectrum (E convention) with the lowest `vectors`
  // eigenvectors. Only levels below `vectors` carry polished eigenvalues, so
  // callers ask for every level they intend to report.
  [[nodiscard]] EigenSolution solve_channel(const PotentialParams& params,
                                            int l, int vectors = 0) const {
    RadialProblem problem{params, l, op_->order(), op_->mapping()};
    EigenSolution s = eigh_symmetric(assemble(problem, *op_), vectors);
    s.meta = {params.g, params.lambda, l, op_->order(),
              op_->mapping().alpha(), op_->mapping().r_max()};
    return s;
  }

 private:
  SolverConfig config_;
  std::shared_ptr<const CollocationOperator> op_;
};

inline double to_reported(double energy) { return 2.0 * energy; }

// Outer 10% of the box may hold at most this much of a state's norm before
// the box is considered too small.
inline constexpr double kBoxLeakTolerance = 1e-8;

struct StateEnergy {
  StateLabel state;
  double energy = 0.0;  // E; reported tables carry 2E
  bool box_warning = false;
  int nodes = -1;  // -1 when no eigenvector was examined

  [[nodiscard]] double two_e() const { return to_reported(energy); }
  [[nodiscard]] bool nodes_consistent() const {
    return nodes < 0 || nodes == state.n_r;
  }
};

namespace detail {

inline void check_index(const EigenSolution& s, int n_r, int l) {
  if (n_r < 0 || n_r >= s.size())
    throw DomainError("state " + spectroscopic_label(n_r, l) +
                      " beyond computed spectrum of size " +
                      std::to_string(s.size()));
}

}  // namespace detail

// (n_r + 1)-th level of the l channel. The eigenvector is inspected for
// node count and leakage into the outer tenth of the box.
inline StateEnergy solve_state(const Solver& solver,
                               const PotentialParams& params, int n_r, int l) {
  if (l < 0) throw DomainError("solve_state: l must be >= 0");
  if (n_r < 0) throw DomainError("solve_state: n_r must be >= 0");
  const auto s = solver.solve_channel(params, l, n_r + 1);
  detail::check_index(s, n_r, l);
  const auto wf = reconstruct_wavefunction(solver.op(), s, n_r, params, l);
  StateEnergy out;
  out.state = {n_r, l};
  out.energy = s.values(n_r);
  out.nodes = count_nodes(wf.psi);
  out.box_warning = outer_norm_fraction(wf) > kBoxLeakTolerance;
  return out;
}

inline StateEnergy solve_state(const PotentialParams& params, int n_r, int l,
                               const SolverConfig& config = {}) {
  return solve_state(Solver(config), params, n_r, l);
}

// Eigenvalues of channels l = 0..l_max for one parameter pair.
class ParameterSpectrum {
 public:
  ParameterSpectrum(const Solver& solver, const PotentialParams& params,
                    int l_max)
      : params_(params) {
    channels_.reserve(l_max + 1);
    for (int l = 0; l <= l_max; ++l)
      channels_.push_back(
          solver.solve_channel(params, l, (l_max - l) / 2 + 1).values);
  }

  [[nodiscard]] const PotentialParams& params() const { return params_; }
  [[nodiscard]] int l_max() const {
    return static_cast<int>(channels_.size()) - 1;
  }

  [[nodiscard]] double energy(int n_r, int l) const {
    if (l < 0 || l > l_max())
      throw DomainError("ParameterSpectrum: l channel not computed");
    const auto& v = channels_[l];
    if (n_r < 0 || n_r >= v.size())
      throw DomainError("state " + spectroscopic_label(n_r, l) +
                        " beyond computed spectrum");
    return v(n_r);
  }
  [[nodiscard]] double two_e(int n_r, int l) const {
    return to_reported(energy(n_r, l));
  }
  [[nodiscard]] double two_e(const StateLabel& s) const {
    return two_e(s.n_r, s.l);
  }

 private:
  PotentialParams params_;
  std::vector<Eigen::VectorXd> channels_;
};

struct SplittingRecord {
  int index = 0;  // position in the catalogue of adjacent same-shell gaps
  StateLabel upper;  // higher n_r
  StateLabel lower;
  double delta = 0.0;  // 2E(upper) - 2E(lower)
  PotentialParams params;
};

// Catalogue index of the first gap in shell n: shells 2..9 hold 1, 1, 2, 2,
// 3, 3, 4, 4 gaps, numbered consecutively from 1.
inline int splitting_catalogue_offset(int n) {
  int offset = 1;
  for (int m = 2; m < n; ++m) offset += m / 2;
  return offset;
}

inline std::vector<SplittingRecord> splittings_for_shell(
    const ParameterSpectrum& spectrum, int n) {
  if (n < 2) throw DomainError("splittings_for_shell: shell must be >= 2");
  std::vector<SplittingRecord> out;
  const int base = splitting_catalogue_offset(n);
  for (int k = 0; 2 * (k + 1) <= n; ++k) {
    const StateLabel lower{k, n - 2 * k};
    const StateLabel upper{k + 1, n - 2 * k - 2};
    out.push_back({base + k, upper, lower,
                   spectrum.two_e(upper) - spectrum.two_e(lower),
                   spectrum.params()});
  }
  return out;
}

inline std::vector<SplittingRecord> splittings_for_shell(
    const Solver& solver, const PotentialParams& params, int n) {
  if (n < 2) throw DomainError("splittings_for_shell: shell must be >= 2");
  return splittings_for_shell(ParameterSpectrum(solver, params, n), n);
}

// Levels closer than this in 2E are reported as ties.
inline constexpr double kTieTolerance = 1e-12;

struct OrderedLevel {
  StateLabel state;
  double two_e;
};

struct OrderingSignature {
  int shell = 0;
  std::vector<OrderedLevel> levels;  // ascending energy
  std::vector<bool> tied_with_next;

  [[nodiscard]] std::vector<StateLabel> labels() const {
    std::vector<StateLabel> out;
    for (const auto& lv : levels) out.push_back(lv.state);
    return out;
  }

  // "5p<4f<3h<2j<1l"; ties print as "=".
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (i > 0) out += tied_with_next[i - 1] ? "=" : "<";
      out += levels[i].state.name();
    }
    return out;
  }
};

inline OrderingSignature ordering_signature(const ParameterSpectrum& spectrum,
                                            int n) {
  OrderingSignature sig;
  sig.shell = n;
  for (const auto& s : enumerate_shell(n))
    sig.levels.push_back({s, spectrum.two_e(s)});
  std::stable_sort(sig.levels.begin(), sig.levels.end(),
                   [](const OrderedLevel& a, const OrderedLevel& b) {
                     return a.two_e < b.two_e;
                   });
  for (std::size_t i = 0; i + 1 < sig.levels.size(); ++i)
    sig.tied_with_next.push_back(sig.levels[i + 1].two_e - sig.levels[i].two_e <
                                 kTieTolerance);
  return sig;
}

inline OrderingSignature ordering_signature(const Solver& solver,
                                            const PotentialParams& params,
                                            int n) {
  return ordering_signature(ParameterSpectrum(solver, params, n), n);
}

struct ScanCell {
  double g = 0.0;
  double lambda = 0.0;
  std::vector<StateEnergy> states;  // shell by shell, enumerate_shell order
  std::vector<OrderingSignature> orderings;
  std::vector<SplittingRecord> splittings;
  std::string error;  // empty on success

  [[nodiscard]] bool ok() const { return error.empty(); }
};

struct ScanTable {
  int n_max = 0;
  std::vector<ScanCell> cells;  // g-major, then lambda, in input order
};

inline ScanCell scan_cell(const Solver& solver, double g, double lambda,
                          int n_max) {
  ScanCell cell;
  cell.g = g;
  cell.lambda = lambda;
  try {
    const ParameterSpectrum spectrum(solver, PotentialParams(g, lambda), n_max);
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& s : enumerate_shell(n))
        cell.states.push_back({s, spectrum.energy(s.n_r, s.l)});
      cell.orderings.push_back(ordering_signature(spectrum, n));
      if (n >= 2) {
        auto gaps = splittings_for_shell(spectrum, n);
        cell.splittings.insert(cell.splittings.end(), gaps.begin(), gaps.end());
      }
    }
  } catch (const std::exception& e) {
    cell.states.clear();
    cell.orderings.clear();
    cell.splittings.clear();
    cell.error = e.what();
  }
  return cell;
}

// All states with shell number <= n_max on the grid g_values x
// lambda_values. Failed cells carry their error and the scan continues.
inline ScanTable scan(const std::vector<double>& g_values,
                      const std::vector<double>& lambda_values, int n_max,
                      const Solver& solver, int workers = 0) {
  if (n_max < 0) throw DomainError("scan: n_max must be >= 0");
  ScanTable table;
  table.n_max = n_max;
  const std::size_t count = g_values.size() * lambda_values.size();
  table.cells.resize(count);
  if (workers <= 0) workers = worker_count(count);
  parallel_for(
      count,
      [&](std::size_t i) {
        const double g = g_values[i / lambda_values.size()];
        const double lambda = lambda_values[i % lambda_values.size()];
        table.cells[i] = scan_cell(solver, g, lambda, n_max);
      },
      workers);
  return table;
}

struct SweepPoint {
  double g = 0.0;
  double lambda = 0.0;
  double two_e = 0.0;
  std::string error;
};

// One state followed across a list of (g, lambda) pairs.
inline std::vector<SweepPoint> sweep_state(
    const std::vector<std::pair<double, double>>& points,
    const StateLabel& state, const Solver& solver, int workers = 0) {
  std::vector<SweepPoint> out(points.size());
  if (workers <= 0) workers = worker_count(points.size());
  parallel_for(
      points.size(),
      [&](std::size_t i) {
        auto& p = out[i];
        p.g = points[i].first;
        p.lambda = points[i].second;
        try {
          const auto s = solver.solve_channel(PotentialParams(p.g, p.lambda),
                                              state.l, state.n_r + 1);
          detail::check_index(s, state.n_r, state.l);
          p.two_e = to_reported(s.values(state.n_r));
        } catch (const std::exception& e) {
          p.error = e.what();
        }
      },
      workers);
  return out;
}

}  // namespace npo

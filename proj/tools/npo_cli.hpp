#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npo/npo.hpp"

namespace npo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Options every subcommand accepts.
struct CommonOptions {
  int order = kDefaultOrder;
  double scale = kDefaultScale;
  std::optional<double> alpha;
  double r_max = kDefaultRmax;
  bool high = false;
  int digits = 12;
  std::string out_path;

  [[nodiscard]] SolverConfig config() const {
    SolverConfig c;
    c.order = order;
    c.scale = scale;
    c.alpha = alpha;
    c.r_max = high ? kHighLyingRmax : r_max;
    return c;
  }
};

inline void add_common(CLI::App& app, CommonOptions& o) {
  app.add_option("--N", o.order, "Collocation order")
      ->check(CLI::Range(2, 4096));
  auto* scale = app.add_option("--scale", o.scale,
                               "Mapping scale L (alpha = 2L/r_max)")
                    ->check(CLI::PositiveNumber);
  app.add_option("--alpha", o.alpha,
                 "Fix the mapping alpha directly (L = alpha r_max / 2)")
      ->check(CLI::PositiveNumber)
      ->excludes(scale);
  auto* rmax = app.add_option("--rmax", o.r_max, "Box radius")
                   ->check(CLI::PositiveNumber);
  app.add_flag("--high", o.high, "High-lying states: r_max = 300")
      ->excludes(rmax);
  app.add_option("--digits", o.digits, "Printed fractional digits")
      ->check(CLI::Range(1, 15));
  app.add_option("--out", o.out_path, "Write output to this file");
}

// Collects command output and flushes it to --out or stdout.
class Output {
 public:
  Output(const CommonOptions& opts, std::ostream& fallback)
      : path_(opts.out_path), fallback_(fallback) {}

  std::ostream& stream() { return buffer_; }

  void flush() {
    if (path_.empty()) {
      fallback_ << buffer_.str();
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw Error("cannot write '" + path_ + "'");
    f << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

struct SolveOptions {
  CommonOptions common;
  double g = 0.0;
  double lambda = 0.0;
  std::optional<int> l;
  std::optional<int> n_r;
  std::optional<int> n_shell;
  bool all_shells = false;
  int n_max = 9;
};

struct ScanOptions {
  CommonOptions common;
  std::vector<double> g_values;
  std::vector<double> lambda_values;
  std::optional<double> g_fixed;
  std::optional<double> lambda_fixed;
  std::string state;
  int n_max = 9;
};

struct SplittingOptions {
  CommonOptions common;
  double g = 0.0;
  double lambda = 0.0;
  std::optional<int> n_shell;
  int n_max = 9;
};

struct DensityOptions {
  CommonOptions common;
  double g = 0.0;
  double lambda = 0.0;
  std::string state;
  std::optional<int> l;
  int n_r = 0;
  int points = 301;
  double r_from = 0.0;
  std::optional<double> r_to;
};

struct ValidateOptions {
  CommonOptions common;
  std::string corpus_path;
  std::string report_path;
  bool errata = false;
};

inline int cmd_solve(const SolveOptions& o, std::ostream& out,
                     std::ostream& err) {
  const Solver solver(o.common.config());
  const PotentialParams params(o.g, o.lambda);
  Output output(o.common, out);
  auto& os = output.stream();
  const int digits = o.common.digits;

  if (o.l) {
    const auto s = solve_state(solver, params, o.n_r.value_or(0), *o.l);
    if (s.box_warning)
      err << "warning: " << s.state.name()
          << " leaks more than 1e-8 of its norm into the outer 10% of the "
             "box; increase --rmax\n";
    if (!s.nodes_consistent())
      err << "warning: " << s.state.name() << " eigenvector has " << s.nodes
          << " nodes\n";
    os << format_truncated(s.two_e(), digits) << "\n";
  } else {
    const int lo = o.n_shell ? *o.n_shell : 0;
    const int hi = o.n_shell ? *o.n_shell : o.n_max;
    const ParameterSpectrum spectrum(solver, params, hi);
    os << "n,label,nr,l,energy\n";
    for (int n = lo; n <= hi; ++n)
      for (const auto& s : enumerate_shell(n))
        os << n << "," << s.name() << "," << s.n_r << "," << s.l << ","
           << format_truncated(spectrum.two_e(s), digits) << "\n";
  }
  output.flush();
  return kExitOk;
}

inline int cmd_scan(const ScanOptions& o, std::ostream& out,
                    std::ostream& err) {
  const Solver solver(o.common.config());
  Output output(o.common, out);
  auto& os = output.stream();
  const int digits = o.common.digits;
  int failures = 0;

  if (!o.state.empty()) {
    const StateLabel state = parse_state_label(o.state);
    std::vector<std::pair<double, double>> points;
    const bool vs_g = o.lambda_fixed.has_value();
    if (vs_g) {
      for (double g : o.g_values) points.emplace_back(g, *o.lambda_fixed);
      os << "g,energy\n";
    } else {
      for (double lambda : o.lambda_values)
        points.emplace_back(*o.g_fixed, lambda);
      os << "lambda,energy\n";
    }
    for (const auto& p : sweep_state(points, state, solver)) {
      os << format_exact(vs_g ? p.g : p.lambda) << ",";
      if (p.error.empty()) {
        os << format_truncated(p.two_e, digits);
      } else {
        ++failures;
        err << "error at g=" << p.g << " lambda=" << p.lambda << ": "
            << p.error << "\n";
      }
      os << "\n";
    }
  } else {
    const auto table = scan(o.g_values, o.lambda_values, o.n_max, solver);
    os << "g,lambda,kind,n,label,nr,l,value,detail\n";
    for (const auto& cell : table.cells) {
      const std::string head =
          format_exact(cell.g) + "," + format_exact(cell.lambda) + ",";
      if (!cell.ok()) {
        ++failures;
        os << head << "error,,,,,,\"" << cell.error << "\"\n";
        continue;
      }
      for (const auto& s : cell.states)
        os << head << "state," << s.state.shell() << "," << s.state.name()
           << "," << s.state.n_r << "," << s.state.l << ","
           << format_truncated(s.two_e(), digits) << ",\n";
      for (const auto& sp : cell.splittings)
        os << head << "splitting," << sp.upper.shell() << ","
           << sp.upper.name() << "-" << sp.lower.name() << "," << sp.index
           << ",," << format_truncated(sp.delta, digits) << ",\n";
      for (const auto& sig : cell.orderings)
        os << head << "ordering," << sig.shell << ",,,,," << sig.to_string()
           << "\n";
    }
  }
  output.flush();
  return failures > 0 ? kExitFailure : kExitOk;
}

inline int cmd_splittings(const SplittingOptions& o, std::ostream& out,
                          std::ostream&) {
  const Solver solver(o.common.config());
  const PotentialParams params(o.g, o.lambda);
  const int lo = o.n_shell ? *o.n_shell : 2;
  const int hi = o.n_shell ? *o.n_shell : o.n_max;
  if (lo < 2) throw DomainError("splittings need shell n >= 2");
  const ParameterSpectrum spectrum(solver, params, hi);
  Output output(o.common, out);
  auto& os = output.stream();
  os << "index,n,upper,lower,delta\n";
  for (int n = lo; n <= hi; ++n)
    for (const auto& sp : splittings_for_shell(spectrum, n))
      os << sp.index << "," << n << "," << sp.upper.name() << ","
         << sp.lower.name() << ","
         << format_truncated(sp.delta, o.common.digits) << "\n";
  output.flush();
  return kExitOk;
}

inline int cmd_density(const DensityOptions& o, std::ostream& out,
                       std::ostream& err) {
  const StateLabel state =
      o.state.empty() ? StateLabel{o.n_r, *o.l} : parse_state_label(o.state);
  const Solver solver(o.common.config());
  const PotentialParams params(o.g, o.lambda);
  const auto solution = solver.solve_channel(params, state.l, state.n_r + 1);
  if (state.n_r >= solution.size())
    throw DomainError("state beyond computed spectrum");
  const auto wf = reconstruct_wavefunction(solver.op(), solution, state.n_r,
                                           params, state.l);
  if (outer_norm_fraction(wf) > kBoxLeakTolerance)
    err << "warning: " << state.name()
        << " leaks into the outer 10% of the box; increase --rmax\n";
  const double r_to = o.r_to.value_or(solver.config().r_max);
  const auto profile =
      density_profile(wf, uniform_radii(o.r_from, r_to, o.points));

  Output output(o.common, out);
  auto& os = output.stream();
  os << "r,density\n";
  for (const auto& s : profile.samples)
    os << format_scientific(s.r) << "," << format_scientific(s.density)
       << "\n";
  output.flush();
  return kExitOk;
}

inline int cmd_validate(const ValidateOptions& o, std::ostream& out,
                        std::ostream&) {
  auto entries = o.corpus_path.empty() ? embedded_corpus()
                                       : load_corpus_file(o.corpus_path);
  if (o.errata) entries = apply_errata(entries);
  const auto report = validate(entries, o.common.config());

  Output output(o.common, out);
  output.stream() << report.to_text();
  output.flush();
  if (!o.report_path.empty()) {
    std::ofstream f(o.report_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + o.report_path + "'");
    f << report.to_csv();
  }
  return report.failures() > 0 ? kExitFailure : kExitOk;
}

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Bound states of the 3D nonpolynomial oscillator "
               "V(r) = r^2 + lambda r^2 / (1 + g r^2)",
               "npo"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Energies (2E) of selected states");
  add_common(*s, solve.common);
  s->add_option("--g", solve.g, "Coupling g > 0")->required();
  s->add_option("--lambda", solve.lambda, "Coupling lambda")->required();
  auto* s_l = s->add_option("--l", solve.l, "Angular momentum")
                  ->check(CLI::NonNegativeNumber);
  auto* s_nr = s->add_option("--nr", solve.n_r, "Radial quantum number")
                   ->check(CLI::NonNegativeNumber);
  auto* s_shell = s->add_option("--n-shell", solve.n_shell,
                                "All states of shell n = 2 nr + l")
                      ->check(CLI::NonNegativeNumber);
  auto* s_all = s->add_flag("--all-shells", solve.all_shells,
                            "All states with n <= --n-max");
  s->add_option("--n-max", solve.n_max, "Highest shell for --all-shells")
      ->check(CLI::NonNegativeNumber);
  s_nr->needs(s_l);
  s_nr->excludes(s_all);
  s_nr->excludes(s_shell);
  s_l->excludes(s_shell);
  s_l->excludes(s_all);
  s_shell->excludes(s_all);

  ScanOptions sc;
  auto* c = app.add_subcommand(
      "scan", "Sweep one state over g or lambda, or tabulate all states");
  add_common(*c, sc.common);
  auto* c_g = c->add_option("--g", sc.g_values, "Comma-separated g values")
                  ->delimiter(',');
  auto* c_lam =
      c->add_option("--lambda", sc.lambda_values,
                    "Comma-separated lambda values")
          ->delimiter(',');
  auto* c_gf = c->add_option("--g-fixed", sc.g_fixed, "Fixed g for a lambda sweep");
  auto* c_lf = c->add_option("--lambda-fixed", sc.lambda_fixed,
                             "Fixed lambda for a g sweep");
  auto* c_state = c->add_option("--state", sc.state, "State label, e.g. 1s");
  auto* c_nmax = c->add_option("--n-max", sc.n_max, "Highest shell")
                     ->check(CLI::NonNegativeNumber);
  c_gf->excludes(c_g);
  c_lf->excludes(c_lam);
  c_gf->excludes(c_lf);
  c_nmax->excludes(c_state);

  SplittingOptions sp;
  auto* p = app.add_subcommand("splittings",
                               "Adjacent same-shell gaps 2E(nr+1) - 2E(nr)");
  add_common(*p, sp.common);
  p->add_option("--g", sp.g, "Coupling g > 0")->required();
  p->add_option("--lambda", sp.lambda, "Coupling lambda")->required();
  auto* p_shell = p->add_option("--n-shell", sp.n_shell, "Single shell n >= 2")
                      ->check(CLI::Range(2, 1000));
  p->add_option("--n-max", sp.n_max, "Highest shell when --n-shell is absent")
      ->check(CLI::Range(2, 1000))
      ->excludes(p_shell);

  DensityOptions de;
  auto* d = app.add_subcommand("density",
                               "Radial distribution |rR|^2 on a uniform grid");
  add_common(*d, de.common);
  d->add_option("--g", de.g, "Coupling g > 0")->required();
  d->add_option("--lambda", de.lambda, "Coupling lambda")->required();
  auto* d_state = d->add_option("--state", de.state, "State label, e.g. 1f");
  auto* d_l = d->add_option("--l", de.l, "Angular momentum")
                  ->check(CLI::NonNegativeNumber);
  auto* d_nr = d->add_option("--nr", de.n_r, "Radial quantum number")
                   ->check(CLI::NonNegativeNumber);
  d->add_option("--points", de.points, "Number of output radii")
      ->check(CLI::Range(2, 1000000));
  d->add_option("--r-from", de.r_from, "First output radius")
      ->check(CLI::NonNegativeNumber);
  d->add_option("--r-to", de.r_to, "Last output radius (default r_max)")
      ->check(CLI::NonNegativeNumber);
  d_state->excludes(d_l);
  d_state->excludes(d_nr);
  d_nr->needs(d_l);

  ValidateOptions va;
  auto* v = app.add_subcommand("validate",
                               "Compare against the bundled benchmark tables");
  add_common(*v, va.common);
  v->add_option("--corpus", va.corpus_path, "Corpus CSV (default: bundled)");
  v->add_option("--report", va.report_path, "Write per-entry CSV report");
  v->add_flag("--errata", va.errata, "Apply the known misprint corrections");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (c->parsed()) {
      if (!sc.state.empty()) {
        const bool vs_g = sc.lambda_fixed && !sc.g_values.empty();
        const bool vs_lambda = sc.g_fixed && !sc.lambda_values.empty();
        if (vs_g == vs_lambda)
          throw CLI::ValidationError(
              "--state", "needs either --g with --lambda-fixed or "
                         "--g-fixed with --lambda");
      } else if (sc.g_values.empty() || sc.lambda_values.empty() ||
                 sc.g_fixed || sc.lambda_fixed) {
        throw CLI::ValidationError(
            "scan", "table mode needs --g and --lambda lists");
      }
    }
    if (s->parsed() && !solve.l && !solve.n_shell && !solve.all_shells)
      throw CLI::ValidationError("solve",
                                 "one of --l, --n-shell, --all-shells is required");
    if (d->parsed() && de.state.empty() && !de.l)
      throw CLI::ValidationError("density", "one of --state, --l is required");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (c->parsed()) return cmd_scan(sc, out, err);
    if (p->parsed()) return cmd_splittings(sp, out, err);
    if (d->parsed()) return cmd_density(de, out, err);
    if (v->parsed()) return cmd_validate(va, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace npo::cli

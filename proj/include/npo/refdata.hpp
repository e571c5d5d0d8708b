#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "npo/config.hpp"
#include "npo/error.hpp"
#include "npo/format.hpp"
#include "npo/parallel.hpp"
#include "npo/reference_corpus.hpp"
#include "npo/spectrum.hpp"

namespace npo {

// One printed benchmark value. For the splitting table (V), `n_r` holds the
// catalogue index and `l` the shell number n.
struct ReferenceEntry {
  std::string table;  // "I" .. "V"
  double g = 0.0;
  double lambda = 0.0;
  int n_r = 0;
  int l = 0;
  double value = 0.0;  // 2E, or Delta(2E) for table V
  int digits = 0;      // printed fractional digits
  double r_max = kDefaultRmax;
  bool exact = false;  // analytically exact rather than numerical

  [[nodiscard]] bool is_splitting() const { return table == "V"; }
};

inline constexpr std::string_view kCorpusHeader =
    "table,g,lambda,nr,l,value,digits,rmax,exact";

// Entries per table in the complete corpus.
inline const std::map<std::string, int>& expected_table_counts() {
  static const std::map<std::string, int> counts{
      {"I", 8}, {"II", 24}, {"III", 20}, {"IV", 68}, {"V", 96}};
  return counts;
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

template <class T>
T parse_field(std::string_view field, int line, std::string_view name) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("corpus line " + std::to_string(line) + ": bad " +
                     std::string(name) + " '" + std::string(field) + "'");
  return value;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

// Parses corpus CSV text. With `require_complete`, the per-table counts of
// the full benchmark set are enforced.
inline std::vector<ReferenceEntry> load_corpus(std::string_view text,
                                               bool require_complete = true) {
  std::vector<ReferenceEntry> entries;
  std::map<std::string, int> counts;
  int line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCorpusHeader)
        throw ParseError("corpus line " + std::to_string(line_no) +
                         ": expected header '" + std::string(kCorpusHeader) +
                         "'");
      header_seen = true;
      continue;
    }
    const auto f = detail::split_csv(line);
    if (f.size() != 9)
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": expected 9 fields, got " + std::to_string(f.size()));
    ReferenceEntry e;
    e.table = std::string(f[0]);
    if (!expected_table_counts().contains(e.table))
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": unknown table '" + e.table + "'");
    e.g = detail::parse_field<double>(f[1], line_no, "g");
    e.lambda = detail::parse_field<double>(f[2], line_no, "lambda");
    e.n_r = detail::parse_field<int>(f[3], line_no, "nr");
    e.l = detail::parse_field<int>(f[4], line_no, "l");
    e.value = detail::parse_field<double>(f[5], line_no, "value");
    e.digits = detail::parse_field<int>(f[6], line_no, "digits");
    e.r_max = detail::parse_field<double>(f[7], line_no, "rmax");
    const int exact = detail::parse_field<int>(f[8], line_no, "exact");
    if (exact != 0 && exact != 1)
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": exact flag must be 0 or 1");
    e.exact = exact == 1;
    if (e.digits < 6)
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": printed digits must be >= 6");
    if (!(e.g > 0.0) || e.n_r < 0 || e.l < 0 || !(e.r_max > 0.0))
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": parameter out of range");
    if (e.is_splitting() && (e.l < 2 || e.n_r < splitting_catalogue_offset(e.l) ||
                             e.n_r >= splitting_catalogue_offset(e.l + 1)))
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": splitting index does not belong to shell");
    ++counts[e.table];
    entries.push_back(e);
  }
  if (!header_seen) throw ParseError("corpus is empty");
  if (require_complete) {
    for (const auto& [table, expected] : expected_table_counts()) {
      const int got = counts.contains(table) ? counts.at(table) : 0;
      if (got != expected)
        throw ParseError("corpus table " + table + " has " +
                         std::to_string(got) + " entries, expected " +
                         std::to_string(expected));
    }
  }
  return entries;
}

// The shipped corpus, after verifying its checksum.
inline std::vector<ReferenceEntry> embedded_corpus() {
  if (fnv1a64(kEmbeddedCorpus) != kEmbeddedCorpusChecksum)
    throw ParseError("embedded corpus checksum mismatch");
  return load_corpus(kEmbeddedCorpus);
}

inline std::vector<ReferenceEntry> load_corpus_file(
    const std::string& path, bool require_complete = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_corpus(ss.str(), require_complete);
}

// Acceptance tolerances per table.
inline constexpr double kExactAbsTolerance = 1e-9;
inline constexpr double kTableRelTolerance = 1e-8;
inline constexpr double kSplittingAbsTolerance = 2e-6;

inline double tolerance_for(const ReferenceEntry& e) {
  if (e.is_splitting()) return kSplittingAbsTolerance;
  if (e.exact) return kExactAbsTolerance;
  return kTableRelTolerance * std::abs(e.value);
}

// Known misprints in the printed tables, kept apart from the corpus so that
// the corpus stays a verbatim transcription.
struct Erratum {
  ReferenceEntry match;  // table, g, lambda, n_r, l identify the entry
  std::optional<double> corrected_g;
  std::optional<double> corrected_value;
  bool exclude = false;
  std::string reason;
};

inline const std::vector<Erratum>& known_errata() {
  static const std::vector<Erratum> errata = [] {
    std::vector<Erratum> v;
    for (int n_r = 0; n_r < 5; ++n_r) {
      Erratum e;
      e.match.table = "III";
      e.match.g = 0.5;
      e.match.lambda = 500;
      e.match.n_r = n_r;
      e.match.l = 20;
      e.corrected_g = 0.1;
      e.reason =
          "l=20 block labelled g=0.5; all five values belong to g=0.1";
      v.push_back(e);
    }
    {
      Erratum e;
      e.match.table = "III";
      e.match.g = 0.1;
      e.match.lambda = 200;
      e.match.n_r = 2;
      e.match.l = 10;
      e.corrected_value = 409.653564997653;
      e.reason = "transposed digits 409.563... for 409.653...";
      v.push_back(e);
    }
    {
      Erratum e;
      e.match.table = "III";
      e.match.g = 0.2;
      e.match.lambda = 1000;
      e.match.n_r = 4;
      e.match.l = 10;
      e.corrected_value = 1133.454829499741;
      e.reason = "leading digits 1135 for 1133; level gaps only smooth for 1133";
      v.push_back(e);
    }
    {
      Erratum e;
      e.match.table = "V";
      e.match.g = 1000;
      e.match.lambda = -100;
      e.match.n_r = 7;
      e.match.l = 6;
      e.exclude = true;
      e.reason = "0.000001 inconsistent with the 1/80 scaling of its row";
      v.push_back(e);
    }
    return v;
  }();
  return errata;
}

inline bool same_entry(const ReferenceEntry& a, const ReferenceEntry& b) {
  return a.table == b.table && a.g == b.g && a.lambda == b.lambda &&
         a.n_r == b.n_r && a.l == b.l;
}

inline const Erratum* find_erratum(const ReferenceEntry& e) {
  for (const auto& er : known_errata())
    if (same_entry(er.match, e)) return &er;
  return nullptr;
}

// Corpus with errata applied: corrected entries replaced, excluded dropped.
inline std::vector<ReferenceEntry> apply_errata(
    const std::vector<ReferenceEntry>& entries) {
  std::vector<ReferenceEntry> out;
  for (auto e : entries) {
    if (const auto* er = find_erratum(e)) {
      if (er->exclude) continue;
      if (er->corrected_g) e.g = *er->corrected_g;
      if (er->corrected_value) e.value = *er->corrected_value;
    }
    out.push_back(e);
  }
  return out;
}

struct ValidationRow {
  ReferenceEntry entry;
  double computed = 0.0;
  double absdiff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;

  [[nodiscard]] int failures() const {
    int n = 0;
    for (const auto& r : rows) n += r.pass ? 0 : 1;
    return n;
  }

  [[nodiscard]] std::vector<ValidationRow> for_table(
      std::string_view table) const {
    std::vector<ValidationRow> out;
    for (const auto& r : rows)
      if (r.entry.table == table) out.push_back(r);
    return out;
  }

  [[nodiscard]] std::string to_csv() const {
    std::string out = "table,g,lambda,nr,l,computed,reference,absdiff,pass\n";
    for (const auto& r : rows) {
      const auto& e = r.entry;
      out += e.table + "," + format_exact(e.g) + "," + format_exact(e.lambda) +
             "," + std::to_string(e.n_r) + "," + std::to_string(e.l) + "," +
             format_exact(r.computed) + "," + format_exact(e.value) + "," +
             format_scientific(r.absdiff, 3) + "," + (r.pass ? "1" : "0") +
             "\n";
    }
    return out;
  }

  [[nodiscard]] std::string to_text() const {
    std::ostringstream os;
    std::map<std::string, std::pair<int, int>> per_table;
    for (const auto& r : rows) {
      auto& [pass, total] = per_table[r.entry.table];
      ++total;
      pass += r.pass ? 1 : 0;
    }
    for (const auto& t : {"I", "II", "III", "IV", "V"}) {
      if (!per_table.contains(t)) continue;
      const auto [pass, total] = per_table.at(t);
      os << "table " << t << ": " << pass << "/" << total << " pass\n";
    }
    for (const auto& r : rows) {
      if (r.pass) continue;
      const auto& e = r.entry;
      os << "FAIL table " << e.table << " g=" << e.g << " lambda=" << e.lambda
         << (e.is_splitting() ? " index=" : " nr=") << e.n_r
         << (e.is_splitting() ? " shell=" : " l=") << e.l
         << " computed=" << format_exact(r.computed)
         << " reference=" << format_exact(e.value)
         << " absdiff=" << format_scientific(r.absdiff, 3);
      if (!r.error.empty()) os << " error=" << r.error;
      os << "\n";
    }
    os << "failures: " << failures() << "\n";
    return os.str();
  }
};

// Solves every referenced channel once and compares. `base` supplies N and
// the mapping; each entry's own r_max is used.
inline ValidationReport validate(const std::vector<ReferenceEntry>& entries,
                                 const SolverConfig& base = {},
                                 int workers = 0) {
  // Channels needed, (r_max, g, lambda, l), with the level count each.
  using Key = std::tuple<double, double, double, int>;
  std::map<Key, std::size_t> channel_index;
  std::vector<Key> channels;
  std::vector<int> levels;
  auto need = [&](double r_max, double g, double lambda, int l, int n_r) {
    const Key k{r_max, g, lambda, l};
    if (!channel_index.contains(k)) {
      channel_index[k] = channels.size();
      channels.push_back(k);
      levels.push_back(0);
    }
    auto& count = levels[channel_index[k]];
    count = std::max(count, n_r + 1);
  };
  for (const auto& e : entries) {
    if (e.is_splitting()) {
      const int k = e.n_r - splitting_catalogue_offset(e.l);
      need(e.r_max, e.g, e.lambda, e.l - 2 * k, k);
      need(e.r_max, e.g, e.lambda, e.l - 2 * k - 2, k + 1);
    } else {
      need(e.r_max, e.g, e.lambda, e.l, e.n_r);
    }
  }

  std::map<double, Solver> solvers;
  for (const auto& c : channels) {
    const double r_max = std::get<0>(c);
    if (!solvers.contains(r_max))
      solvers.emplace(r_max, Solver(base.with_r_max(r_max)));
  }

  std::vector<Eigen::VectorXd> spectra(channels.size());
  std::vector<std::string> errors(channels.size());
  if (workers <= 0) workers = worker_count(channels.size());
  parallel_for(
      channels.size(),
      [&](std::size_t i) {
        const auto& [r_max, g, lambda, l] = channels[i];
        try {
          spectra[i] = solvers.at(r_max)
                           .solve_channel(PotentialParams(g, lambda), l,
                                          levels[i])
                           .values;
        } catch (const std::exception& ex) {
          errors[i] = ex.what();
        }
      },
      workers);

  auto two_e = [&](const ReferenceEntry& e, int n_r, int l,
                   std::string& err) -> double {
    const auto i = channel_index.at({e.r_max, e.g, e.lambda, l});
    if (!errors[i].empty()) {
      err = errors[i];
      return std::nan("");
    }
    if (n_r >= spectra[i].size()) {
      err = "state beyond computed spectrum";
      return std::nan("");
    }
    return to_reported(spectra[i](n_r));
  };

  ValidationReport report;
  for (const auto& e : entries) {
    ValidationRow row;
    row.entry = e;
    if (e.is_splitting()) {
      const int k = e.n_r - splitting_catalogue_offset(e.l);
      row.computed = two_e(e, k + 1, e.l - 2 * k - 2, row.error) -
                     two_e(e, k, e.l - 2 * k, row.error);
    } else {
      row.computed = two_e(e, e.n_r, e.l, row.error);
    }
    row.absdiff = std::abs(row.computed - e.value);
    row.tolerance = tolerance_for(e);
    row.pass = row.error.empty() && row.absdiff <= row.tolerance;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace npo

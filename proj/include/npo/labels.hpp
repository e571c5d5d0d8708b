#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "npo/error.hpp"

namespace npo {

inline constexpr std::string_view kOrbitalLetters = "spdfghijkl";

// Spectroscopic name: (n_r + 1) followed by the letter for l, e.g. n_r=3,
// l=2 -> "4d". l >= 10 is written numerically as "1[l=12]".
inline std::string spectroscopic_label(int n_r, int l) {
  std::string out = std::to_string(n_r + 1);
  if (l >= 0 && l < static_cast<int>(kOrbitalLetters.size()))
    out += kOrbitalLetters[l];
  else
    out += "[l=" + std::to_string(l) + "]";
  return out;
}

struct StateLabel {
  int n_r = 0;
  int l = 0;

  [[nodiscard]] int shell() const { return 2 * n_r + l; }
  [[nodiscard]] std::string name() const { return spectroscopic_label(n_r, l); }

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

// Inverse of spectroscopic_label.
inline StateLabel parse_state_label(std::string_view text) {
  auto fail = [&] {
    return DomainError("invalid state label '" + std::string(text) + "'");
  };
  int principal = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), principal);
  if (ec != std::errc() || principal < 1) throw fail();
  std::string_view rest(ptr, text.data() + text.size() - ptr);

  if (rest.size() == 1) {
    const auto pos = kOrbitalLetters.find(rest[0]);
    if (pos == std::string_view::npos) throw fail();
    return {principal - 1, static_cast<int>(pos)};
  }
  constexpr std::string_view prefix = "[l=";
  if (rest.size() > prefix.size() + 1 && rest.starts_with(prefix) &&
      rest.back() == ']') {
    const auto body = rest.substr(prefix.size(), rest.size() - prefix.size() - 1);
    int l = 0;
    auto [p2, e2] = std::from_chars(body.data(), body.data() + body.size(), l);
    if (e2 != std::errc() || p2 != body.data() + body.size() || l < 0)
      throw fail();
    return {principal - 1, l};
  }
  throw fail();
}

// All (n_r, l) with 2 n_r + l = n, highest l first.
inline std::vector<StateLabel> enumerate_shell(int n) {
  if (n < 0) throw DomainError("enumerate_shell: n must be >= 0");
  std::vector<StateLabel> out;
  for (int n_r = 0; 2 * n_r <= n; ++n_r) out.push_back({n_r, n - 2 * n_r});
  return out;
}

}  // namespace npo

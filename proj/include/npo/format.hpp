#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "npo/error.hpp"

namespace npo {

// Decimal string with exactly `digits` fractional places, truncated toward
// zero rather than rounded: 3.1200818649 at 9 places is "3.120081864" and
// -1.23999 at 2 places is "-1.23".
//
// The value is first fixed to 15 significant digits, the precision a double
// carries reliably, so representation noise (2.4 stored as
// 2.39999999999999991...) does not leak into the truncated output.
inline std::string format_truncated(double value, int digits) {
  if (digits < 1 || digits > 15)
    throw DomainError("format_truncated: digits must be in [1, 15]");
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", std::abs(value));
  // buf = d.dddddddddddddde[+-]xx
  std::string mantissa;
  mantissa += buf[0];
  mantissa.append(buf + 2, buf + 16);
  const int exponent = std::atoi(buf + 17);

  std::string int_part;
  std::string frac_part;
  const int point = exponent + 1;  // digits before the decimal point
  if (point <= 0) {
    int_part = "0";
    frac_part = std::string(-point, '0') + mantissa;
  } else if (point >= static_cast<int>(mantissa.size())) {
    int_part = mantissa + std::string(point - mantissa.size(), '0');
  } else {
    int_part = mantissa.substr(0, point);
    frac_part = mantissa.substr(point);
  }
  frac_part.resize(digits, '0');

  const bool zero = int_part.find_first_not_of('0') == std::string::npos &&
                    frac_part.find_first_not_of('0') == std::string::npos;
  std::string out = (value < 0 && !zero) ? "-" : "";
  out += int_part;
  out += '.';
  out += frac_part;
  return out;
}

// Scientific notation with `significant` significant digits.
inline std::string format_scientific(double value, int significant = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant - 1, value);
  return buf;
}

// Shortest round-trippable form for machine-readable CSV cells.
inline std::string format_exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace npo

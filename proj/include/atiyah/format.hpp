#pragma once

// Canonical text for bundle classes: "O", "L", "L^-2", "F_3", "L^2*F_3",
// and sums "2 F_2 + F_4" in (index, exponent) order. The expression parser
// accepts everything produced here.

#include <sstream>
#include <string>

#include "atiyah/kring.hpp"

namespace atiyah {

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const IndecomposableBundle& b) {
  std::string out;
  if (b.exponent() == 1)
    out = "L";
  else if (b.exponent() != 0)
    out = "L^" + std::to_string(b.exponent());
  if (b.index() > 1) {
    if (!out.empty()) out += '*';
    out += "F_" + std::to_string(b.index());
  }
  return out.empty() ? "O" : out;
}

inline std::string to_string(const BundleSum& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, m] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << ' ';
    os << to_string(b);
  }
  return os.str();
}

inline std::string to_string(const KRingElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag << ' ';
    os << to_string(b);
  }
  return os.str();
}

/// Line bundle O(d) on the projective line.
inline std::string p1_line(std::int64_t degree) {
  return "O(" + std::to_string(degree) + ")";
}

}  // namespace atiyah

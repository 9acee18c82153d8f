#pragma once

// Violation measures for extended-real inequalities and identities. A result
// of 0 means the property holds; +inf means an infinity appeared on the wrong
// side. Finite gaps are scaled by max(1, |reference|).

#include "divlab/extended_real.hpp"

#include <algorithm>
#include <cmath>

namespace divlab::checks {

inline double scale_of(double reference) { return std::max(1.0, std::abs(reference)); }

/// How far lhs <= rhs fails.
inline double le_violation(double lhs, double rhs) {
  if (is_plus_inf(rhs) || is_minus_inf(lhs)) return 0.0;
  if (is_plus_inf(lhs) || is_minus_inf(rhs)) return kInf;
  return std::max(0.0, (lhs - rhs) / scale_of(rhs));
}

/// How far lhs == rhs fails; infinities must coincide exactly.
inline double eq_violation(double lhs, double rhs) {
  if (std::isinf(lhs) || std::isinf(rhs)) return lhs == rhs ? 0.0 : kInf;
  return std::abs(lhs - rhs) / scale_of(rhs);
}

/// Unscaled |lhs - rhs| with the same infinity rule.
inline double abs_gap(double lhs, double rhs) {
  if (std::isinf(lhs) || std::isinf(rhs)) return lhs == rhs ? 0.0 : kInf;
  return std::abs(lhs - rhs);
}

}  // namespace divlab::checks

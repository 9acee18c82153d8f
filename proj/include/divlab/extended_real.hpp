#pragma once

// Values in (-inf, +inf] are plain doubles; +inf is a legitimate result, NaN never is.

#include <cmath>
#include <limits>
#include <string>

namespace divlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_plus_inf(double x) noexcept { return std::isinf(x) && x > 0; }
inline bool is_minus_inf(double x) noexcept { return std::isinf(x) && x < 0; }

/// value * mass with (+inf) * 0 = 0 and (+inf) * c = +inf for c > 0.
inline double boundary_product(double value, double mass) noexcept {
  if (mass == 0.0) return 0.0;
  if (std::isinf(value)) return value;
  return value * mass;
}

/// Addition in the extended reals. Mixing +inf and -inf is a caller bug and yields NaN.
inline double ext_add(double x, double y) noexcept { return x + y; }

/// Equality used by tests: infinities must match exactly, finite values within tol.
inline bool ext_close(double x, double y, double tol) noexcept {
  if (std::isinf(x) || std::isinf(y)) return x == y;
  return std::abs(x - y) <= tol;
}

/// "+inf", "-inf" or a round-trippable decimal.
std::string format_extended(double x, int significant_digits = 17);

/// Inverse of format_extended; also accepts "inf" and "-inf".
double parse_extended(const std::string& text);

}  // namespace divlab

#pragma once

#include "divlab/divergence.hpp"

#include <optional>
#include <vector>

namespace divlab {

struct RenyiResult {
  double alpha = 0.0;
  double q_value = 0.0;
  double d_value = 0.0;
  /// Filled by sweeps that request it, for alpha > 1 only.
  std::optional<double> sandwiched;
};

/// Q_alpha = sum w a^alpha b^(1-alpha); +inf for alpha > 1 when s(rho) is not under s(sigma);
/// Q_1 = Tr rho.
double q_alpha(const ModularSpectrum& spec, double alpha);
double q_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha);

/// (alpha-1)^{-1} log(Q_alpha / Tr rho); alpha = 1 gives d_one.
double d_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha);
double d_one(const PositiveFunctional& rho, const PositiveFunctional& sigma);

/// log of the smallest t with rho <= t sigma.
double d_max(const PositiveFunctional& rho, const PositiveFunctional& sigma);

/// Tr((sigma^g rho sigma^g)^alpha), g = (1-alpha)/(2 alpha), for alpha > 1.
double sandwiched_q_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha);
double sandwiched_d_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha);

/// Exponent used in place of alpha -> inf.
inline constexpr double kDInfinityProxyAlpha = 64.0;

struct AlphaSweep {
  std::vector<RenyiResult> rows;
  /// D nondecreasing in alpha (1e-9 slack).
  bool monotone = true;
  /// log Q convex over the grid (checked with second differences); vacuous if Q hits 0 or +inf.
  bool log_convex = true;
};

AlphaSweep alpha_sweep(const PositiveFunctional& rho, const PositiveFunctional& sigma, std::vector<double> grid,
                       bool with_sandwiched = false);

}  // namespace divlab

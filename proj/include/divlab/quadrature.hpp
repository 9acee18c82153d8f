#pragma once

#include <functional>
#include <span>

namespace divlab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integrand expressed against du where s = e^u, i.e. the caller supplies
/// g(s) * s for a target integral of g(s) ds. Receives s in (0, inf); it is
/// never called at s = 0 or s = inf.
using LogScaleIntegrand = std::function<double(double)>;

struct QuadratureOptions {
  /// Relative tolerance handed to each Gauss-Kronrod panel.
  double relative_tolerance = 1e-13;
  unsigned max_depth = 14;
  /// Non-convergence threshold: error estimate above this fraction of the L1
  /// norm raises QuadratureError.
  double failure_ratio = 1e-6;
};

/// Adaptive Gauss-Kronrod quadrature of int_{s_lo}^{s_hi} g(s) ds on the
/// log scale. Either bound may be 0 or +inf. `breakpoints` (in s) split the
/// range into panels integrated separately.
QuadratureResult integrate_log_scale(const LogScaleIntegrand& g_times_s, double s_lo, double s_hi,
                                     std::span<const double> breakpoints = {},
                                     const QuadratureOptions& options = {});

}  // namespace divlab

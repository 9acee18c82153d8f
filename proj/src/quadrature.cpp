#include "divlab/quadrature.hpp"

#include "divlab/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace divlab {

QuadratureResult integrate_log_scale(const LogScaleIntegrand& g_times_s, double s_lo, double s_hi,
                                     std::span<const double> breakpoints, const QuadratureOptions& options) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!(s_lo >= 0.0) || !(s_hi > s_lo)) throw Error(ErrorKind::DomainError, "invalid quadrature range");

  const double u_lo = s_lo == 0.0 ? -inf : std::log(s_lo);
  const double u_hi = std::isinf(s_hi) ? inf : std::log(s_hi);
  std::vector<double> cuts{u_lo};
  for (double b : breakpoints) {
    if (b > s_lo && b < s_hi) cuts.push_back(std::log(b));
  }
  cuts.push_back(u_hi);
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto integrand = [&](double u) -> double {
    if (!std::isfinite(u)) return 0.0;
    const double s = std::exp(u);
    if (s == 0.0 || std::isinf(s)) return 0.0;
    return g_times_s(s);
  };

  QuadratureResult total;
  double l1_total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    double err = 0.0;
    double l1 = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(integrand, cuts[k], cuts[k + 1], options.max_depth,
                                                          options.relative_tolerance, &err, &l1);
    if (!std::isfinite(v)) throw Error(ErrorKind::QuadratureError, "integrand produced a non-finite value");
    total.value += v;
    total.error_estimate += err;
    l1_total += l1;
  }
  if (total.error_estimate > options.failure_ratio * std::max(1.0, l1_total)) {
    std::ostringstream os;
    os << "adaptive quadrature did not converge (error estimate " << total.error_estimate << ")";
    throw Error(ErrorKind::QuadratureError, os.str());
  }
  return total;
}

}  // namespace divlab

#include "divlab/renyi.hpp"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace divlab {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::DomainError, "alpha must be finite and >= 0");
}

void require_nonzero(const PositiveFunctional& rho) {
  if (!(rho.trace() > 0.0)) throw Error(ErrorKind::DomainError, "Renyi divergences need rho != 0");
}

double log_ratio_over(double q, double tr_rho, double alpha) {
  if (is_plus_inf(q)) return kInf;  // only for alpha > 1
  if (q <= 0.0) return alpha < 1.0 ? kInf : -kInf;
  return std::log(q / tr_rho) / (alpha - 1.0);
}

}  // namespace

double q_alpha(const ModularSpectrum& spec, double alpha) {
  require_alpha(alpha);
  if (alpha == 1.0) return spec.rho_trace;
  if (alpha > 1.0 && spec.rho_off_mass > 0.0) return kInf;
  return kernels::parallel::pair_sum(spec.a, spec.b, spec.w, [alpha](double a, double b) {
    return std::exp(alpha * std::log(a) + (1.0 - alpha) * std::log(b));
  });
}

double q_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha) {
  require_alpha(alpha);
  return q_alpha(relative_modular_spectrum(rho, sigma), alpha);
}

double d_one(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  require_nonzero(rho);
  const double d = relative_entropy(rho, sigma);
  return is_plus_inf(d) ? kInf : d / rho.trace();
}

double d_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha) {
  require_alpha(alpha);
  require_nonzero(rho);
  if (alpha == 1.0) return d_one(rho, sigma);
  return log_ratio_over(q_alpha(rho, sigma, alpha), rho.trace(), alpha);
}

double d_max(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
  if (spec.rho_off_mass > 0.0) return kInf;
  const HermitianOperator inv_sqrt = apply_spectral_function(
      sigma.spectrum(), [](double x) { return 1.0 / std::sqrt(x); }, ZeroPolicy::MapZeroToZero);
  const HermitianOperator m =
      HermitianOperator::symmetrize(inv_sqrt.matrix() * rho.op().matrix() * inv_sqrt.matrix());
  const double top = eig_hermitian(m).eigenvalues.maxCoeff();
  return top > 0.0 ? std::log(top) : -kInf;
}

double sandwiched_q_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::DomainError, "sandwiched Renyi quantities are evaluated for alpha > 1");
  }
  const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
  if (spec.rho_off_mass > 0.0) return kInf;
  const double gamma = (1.0 - alpha) / (2.0 * alpha);
  const HermitianOperator sg = apply_spectral_function(
      sigma.spectrum(), [gamma](double x) { return std::pow(x, gamma); }, ZeroPolicy::MapZeroToZero);
  const HermitianOperator m = HermitianOperator::symmetrize(sg.matrix() * rho.op().matrix() * sg.matrix());
  const RealVector ev = eig_hermitian(m).eigenvalues;
  double q = 0.0;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.0) q += std::pow(ev(i), alpha);
  }
  return q;
}

double sandwiched_d_alpha(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha) {
  require_nonzero(rho);
  return log_ratio_over(sandwiched_q_alpha(rho, sigma, alpha), rho.trace(), alpha);
}

AlphaSweep alpha_sweep(const PositiveFunctional& rho, const PositiveFunctional& sigma, std::vector<double> grid,
                       bool with_sandwiched) {
  require_nonzero(rho);
  std::sort(grid.begin(), grid.end());
  const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
  const double d_limit = [&] {
    const double d = standard_f_divergence(catalog_lookup("t_log_t"), spec);
    return is_plus_inf(d) ? kInf : d / rho.trace();
  }();

  AlphaSweep out;
  for (double alpha : grid) {
    require_alpha(alpha);
    RenyiResult r;
    r.alpha = alpha;
    r.q_value = q_alpha(spec, alpha);
    r.d_value = alpha == 1.0 ? d_limit : log_ratio_over(r.q_value, rho.trace(), alpha);
    if (with_sandwiched && alpha > 1.0) r.sandwiched = sandwiched_d_alpha(rho, sigma, alpha);
    out.rows.push_back(r);
  }

  for (std::size_t k = 1; k < out.rows.size(); ++k) {
    const double lo = out.rows[k - 1].d_value;
    const double hi = out.rows[k].d_value;
    if (is_plus_inf(lo) && !is_plus_inf(hi)) out.monotone = false;
    if (std::isfinite(lo) && std::isfinite(hi) && lo > hi + 1e-9 * std::max(1.0, std::abs(hi))) {
      out.monotone = false;
    }
  }
  // Second differences on a possibly non-uniform grid; rows with alpha = 1
  // carry Q_1 = Tr rho, which is continuous, so they take part too.
  for (std::size_t k = 1; k + 1 < out.rows.size(); ++k) {
    const RenyiResult& l = out.rows[k - 1];
    const RenyiResult& m = out.rows[k];
    const RenyiResult& r = out.rows[k + 1];
    if (!(l.q_value > 0.0 && m.q_value > 0.0 && r.q_value > 0.0)) continue;
    if (std::isinf(l.q_value) || std::isinf(m.q_value) || std::isinf(r.q_value)) continue;
    const double t = (m.alpha - l.alpha) / (r.alpha - l.alpha);
    const double chord = (1.0 - t) * std::log(l.q_value) + t * std::log(r.q_value);
    if (std::log(m.q_value) > chord + 1e-9) out.log_convex = false;
  }
  return out;
}

}  // namespace divlab

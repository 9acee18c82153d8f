#include "divlab/divergence.hpp"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/kernels.hpp"

#include <cmath>
#include <sstream>

namespace divlab {

namespace {

std::vector<Index> positive_indices(const RealVector& eigenvalues, bool positive) {
  const double thr = zero_threshold(eigenvalues);
  std::vector<Index> out;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    if ((eigenvalues(i) > thr) == positive) out.push_back(i);
  }
  return out;
}

// Masses below this fraction of the total are eigenvector noise.
double off_mass(double raw, double total) {
  return raw > tolerance::kSupport * total ? raw : 0.0;
}

}  // namespace

std::vector<SpectralPair> ModularSpectrum::pairs() const {
  std::vector<SpectralPair> out;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) {
      if (w(i, j) >= kernels::kWeightCutoff) out.push_back({a(i), b(j), w(i, j)});
    }
  }
  return out;
}

ModularSpectrum relative_modular_spectrum(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "rho has dimension " << rho.dim() << " but sigma has " << sigma.dim();
    throw Error(ErrorKind::DimensionError, os.str());
  }
  const EigenSystem& er = rho.spectrum();
  const EigenSystem& es = sigma.spectrum();
  const RealMatrix full = kernels::parallel::overlap_weights(er.eigenvectors, es.eigenvectors);

  const auto rho_on = positive_indices(er.eigenvalues, true);
  const auto rho_off = positive_indices(er.eigenvalues, false);
  const auto sig_on = positive_indices(es.eigenvalues, true);
  const auto sig_off = positive_indices(es.eigenvalues, false);

  ModularSpectrum out;
  out.rho_trace = rho.trace();
  out.sigma_trace = sigma.trace();
  out.a.resize(static_cast<Index>(rho_on.size()));
  out.b.resize(static_cast<Index>(sig_on.size()));
  out.w.resize(out.a.size(), out.b.size());
  for (std::size_t i = 0; i < rho_on.size(); ++i) out.a(i) = er.eigenvalues(rho_on[i]);
  for (std::size_t j = 0; j < sig_on.size(); ++j) out.b(j) = es.eigenvalues(sig_on[j]);
  for (std::size_t i = 0; i < rho_on.size(); ++i) {
    for (std::size_t j = 0; j < sig_on.size(); ++j) out.w(i, j) = full(rho_on[i], sig_on[j]);
  }

  // Summed over the kernels directly so that a faithful state has exactly zero off-mass.
  double sigma_off = 0.0;
  for (Index i : rho_off) {
    for (std::size_t j = 0; j < sig_on.size(); ++j) {
      const double wij = full(i, sig_on[j]);
      if (wij >= kernels::kWeightCutoff) sigma_off += wij * out.b(static_cast<Index>(j));
    }
  }
  double rho_off_mass = 0.0;
  for (Index j : sig_off) {
    for (std::size_t i = 0; i < rho_on.size(); ++i) {
      const double wij = full(rho_on[i], j);
      if (wij >= kernels::kWeightCutoff) rho_off_mass += wij * out.a(static_cast<Index>(i));
    }
  }
  out.sigma_off_mass = off_mass(sigma_off, out.sigma_trace);
  out.rho_off_mass = off_mass(rho_off_mass, out.rho_trace);
  return out;
}

double standard_f_divergence(const ConvexFunctionSpec& f, const ModularSpectrum& spec) {
  const double finite = kernels::parallel::pair_sum(spec.a, spec.b, spec.w,
                                                    [&f](double a, double b) { return f.weighted(a, b); });
  if (!std::isfinite(finite)) {
    throw Error(ErrorKind::NumericalError, "non-finite spectral sum for " + f.name);
  }
  return finite + boundary_product(f.f_at_zero_plus, spec.sigma_off_mass) +
         boundary_product(f.fprime_at_infinity, spec.rho_off_mass);
}

double standard_f_divergence(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                             const PositiveFunctional& sigma) {
  return standard_f_divergence(f, relative_modular_spectrum(rho, sigma));
}

double classical_f_divergence(const ConvexFunctionSpec& f, const ClassicalDistribution& phi,
                              const ClassicalDistribution& psi) {
  if (phi.size() != psi.size()) throw Error(ErrorKind::DimensionError, "distributions differ in length");
  double total = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const double p = phi.weights()[k];
    const double q = psi.weights()[k];
    if (p > 0.0 && q > 0.0) {
      total += f.weighted(p, q);
    } else if (q > 0.0) {
      total += boundary_product(f.f_at_zero_plus, q);
    } else if (p > 0.0) {
      total += boundary_product(f.fprime_at_infinity, p);
    }
  }
  return total;
}

double relative_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  static const ConvexFunctionSpec t_log_t = catalog_lookup("t_log_t");
  return standard_f_divergence(t_log_t, rho, sigma);
}

double umegaki_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionError, "rho and sigma differ in dimension");
  const HermitianOperator s_sigma = sigma.support();
  const ComplexMatrix& r = rho.op().matrix();
  const double escaped = rho.trace() - std::real((r * s_sigma.matrix()).trace());
  if (escaped > tolerance::kSupport * std::max(rho.trace(), 1e-300)) return kInf;
  const auto log_or_zero = [](double x) { return std::log(x); };
  const HermitianOperator log_rho = apply_spectral_function(rho.spectrum(), log_or_zero, ZeroPolicy::MapZeroToZero);
  const HermitianOperator log_sigma =
      apply_spectral_function(sigma.spectrum(), log_or_zero, ZeroPolicy::MapZeroToZero);
  return rho.op().trace_product(log_rho - log_sigma);
}

}  // namespace divlab

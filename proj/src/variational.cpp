#include "divlab/variational.hpp"

#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"
#include "divlab/kernels.hpp"
#include "divlab/parallel.hpp"

#include <Eigen/QR>

#include <cmath>

namespace divlab {

double inner_minimum(const ModularSpectrum& spec, double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::DomainError, "inner minimum needs s > 0");
  if (std::isinf(s)) return 0.0;
  return kernels::parallel::inner_minimum(spec.a, spec.b, spec.w, s);
}

double inner_objective(const PositiveFunctional& rho, const PositiveFunctional& sigma, double s,
                       const ComplexMatrix& x) {
  const ComplexMatrix& dr = rho.op().matrix();
  const ComplexMatrix& ds = sigma.op().matrix();
  const ComplexMatrix one_minus = ComplexMatrix::Identity(x.rows(), x.cols()) - x;
  return std::real((one_minus * ds * one_minus.adjoint()).trace()) + std::real((x.adjoint() * dr * x).trace()) / s;
}

namespace {

// L(x) = s^{-1} D_rho x + x D_sigma, self-adjoint and positive for the
// Hilbert-Schmidt inner product.
ComplexMatrix stationarity_operator(const ComplexMatrix& dr, const ComplexMatrix& ds, double s,
                                    const ComplexMatrix& x) {
  return dr * x / s + x * ds;
}

double hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) { return std::real((x.adjoint() * y).trace()); }

}  // namespace

InnerMinimizer inner_minimum_numeric(const PositiveFunctional& rho, const PositiveFunctional& sigma, double s,
                                     NumericMode mode, int iters) {
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorKind::DomainError, "inner minimum needs finite s > 0");
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionError, "rho and sigma differ in dimension");
  const Index d = rho.dim();
  const ComplexMatrix& dr = rho.op().matrix();
  const ComplexMatrix& ds = sigma.op().matrix();
  InnerMinimizer out;

  if (mode == NumericMode::Direct) {
    // vec(A X B) = (B^T kron A) vec(X), column-major vec.
    const Index n = d * d;
    ComplexMatrix sys = ComplexMatrix::Zero(n, n);
    for (Index c = 0; c < d; ++c) {
      for (Index r = 0; r < d; ++r) {
        const Index row = c * d + r;
        for (Index k = 0; k < d; ++k) {
          sys(row, c * d + k) += dr(r, k) / s;  // (I kron D_rho / s)
          sys(row, k * d + r) += ds(k, c);      // (D_sigma^T kron I)
        }
      }
    }
    const Eigen::Map<const Eigen::VectorXcd> rhs(ds.data(), n);
    const Eigen::VectorXcd sol = sys.completeOrthogonalDecomposition().solve(rhs);
    out.x = Eigen::Map<const ComplexMatrix>(sol.data(), d, d);
    out.iterations = 1;
  } else {
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    ComplexMatrix r = ds;
    ComplexMatrix p = r;
    double rr = hs_inner(r, r);
    const double target = 1e-26 * std::max(rr, 1e-300);
    int k = 0;
    for (; k < iters && rr > target; ++k) {
      const ComplexMatrix lp = stationarity_operator(dr, ds, s, p);
      const double plp = hs_inner(p, lp);
      if (!(plp > 0.0)) break;
      const double step = rr / plp;
      x += step * p;
      r -= step * lp;
      const double rr_next = hs_inner(r, r);
      p = r + (rr_next / rr) * p;
      rr = rr_next;
    }
    if (rr > target) {
      throw OptimizationError("conjugate gradient did not converge for the inner minimum", std::sqrt(rr));
    }
    out.x = std::move(x);
    out.iterations = k;
  }
  out.value = inner_objective(rho, sigma, s, out.x);
  return out;
}

double variational_value_at_n(const ConvexFunctionSpec& f, const ModularSpectrum& spec, int n, long long* nodes) {
  const TruncationData trunc = truncate(f, n);
  long long count = 0;
  const double integral = nu_integral(trunc, [&](double s) {
    ++count;
    return (1.0 + s) * inner_minimum(spec, s);
  });
  if (nodes != nullptr) *nodes += count;
  return trunc.fn_at_zero_plus * spec.sigma_trace + trunc.fn_prime_at_infinity * spec.rho_trace - integral;
}

double variational_value_at_n(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                              const PositiveFunctional& sigma, int n, InnerSolver solver, long long* nodes) {
  if (solver == InnerSolver::ClosedForm) {
    return variational_value_at_n(f, relative_modular_spectrum(rho, sigma), n, nodes);
  }
  if (rho.dim() != sigma.dim()) throw Error(ErrorKind::DimensionError, "rho and sigma differ in dimension");
  const TruncationData trunc = truncate(f, n);
  long long count = 0;
  const double integral = nu_integral(trunc, [&](double s) {
    ++count;
    return (1.0 + s) * inner_minimum_numeric(rho, sigma, s).value;
  });
  if (nodes != nullptr) *nodes += count;
  return trunc.fn_at_zero_plus * sigma.trace() + trunc.fn_prime_at_infinity * rho.trace() - integral;
}

bool looks_divergent(const std::vector<double>& values, double ceiling) {
  const std::size_t k = values.size();
  if (k < 2) return false;
  const double last = values[k - 1];
  if (last > ceiling && last > values[k - 2]) return true;
  constexpr std::size_t kWindow = 4;
  constexpr double kShrinkRatio = 0.985;
  if (k < kWindow + 2) return false;
  const double floor = 1e-9 * std::max(1.0, std::abs(last));
  double prev = values[k - kWindow - 1] - values[k - kWindow - 2];
  if (!(prev > floor)) return false;
  for (std::size_t i = k - kWindow; i < k; ++i) {
    const double inc = values[i] - values[i - 1];
    if (!(inc > floor) || inc < kShrinkRatio * prev) return false;
    prev = inc;
  }
  return true;
}

VariationalResult variational_Sf(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                                 const PositiveFunctional& sigma, const VariationalOptions& options) {
  if (options.n_max < 1) throw Error(ErrorKind::DomainError, "n_max must be >= 1");
  VariationalResult out;
  VariationalReport& rep = out.report;
  rep.inner_solver = options.inner_solver;
  for (int n = 1; n < options.n_max; n *= 2) rep.n_schedule.push_back(n);
  rep.n_schedule.push_back(options.n_max);

  const auto count = static_cast<int>(rep.n_schedule.size());
  rep.values.assign(static_cast<std::size_t>(count), 0.0);
  std::vector<long long> nodes(static_cast<std::size_t>(count), 0);

  if (options.inner_solver == InnerSolver::ClosedForm) {
    const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
    parallel_for(count, [&](int k) { rep.values[k] = variational_value_at_n(f, spec, rep.n_schedule[k], &nodes[k]); });
  } else {
    parallel_for(count, [&](int k) {
      rep.values[k] = variational_value_at_n(f, rho, sigma, rep.n_schedule[k], InnerSolver::Numeric, &nodes[k]);
    });
  }
  for (int k = 0; k < count; ++k) {
    rep.quadrature_nodes += nodes[k];
    if (k > 0 && rep.values[k - 1] > rep.values[k] + 1e-9 * std::max(1.0, std::abs(rep.values[k]))) {
      rep.monotone = false;
    }
  }
  rep.declared_infinite = looks_divergent(rep.values, options.divergence_ceiling);
  out.value = rep.declared_infinite ? kInf : rep.values.back();
  return out;
}

double kosaki_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma, int n) {
  if (n < 1) throw Error(ErrorKind::DomainError, "n must be >= 1");
  const ModularSpectrum spec = relative_modular_spectrum(rho, sigma);
  const double nn = static_cast<double>(n);
  const double log_n = std::log(nn);
  const double sum = kernels::parallel::pair_sum(spec.a, spec.b, spec.w, [nn, log_n](double a, double b) {
    return b * (log_n + std::log(nn * a + b) - std::log(a + nn * b));
  });
  return spec.sigma_trace * log_n + (spec.sigma_trace - spec.rho_trace) * 2.0 / (nn + 1.0) - sum;
}

}  // namespace divlab

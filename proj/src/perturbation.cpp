#include "divlab/perturbation.hpp"

#include "divlab/divergence.hpp"
#include "divlab/errors.hpp"
#include "divlab/extended_real.hpp"

#include <algorithm>
#include <cmath>

namespace divlab {

namespace {

HermitianOperator rebuild(const EigenSystem& es, const RealVector& values) {
  const ComplexMatrix& v = es.eigenvectors;
  return HermitianOperator::symmetrize(v * values.cast<Complex>().asDiagonal() * v.adjoint());
}

void require_faithful(const PositiveFunctional& p, const char* what) {
  if (!p.is_faithful()) throw Error(ErrorKind::NotFaithful, std::string(what) + " must have full support");
}

void require_same_dim(const PositiveFunctional& p, const HermitianOperator& h) {
  if (p.dim() != h.dim()) throw Error(ErrorKind::DimensionError, "operator dimensions differ");
}

double frobenius_sq(const HermitianOperator& h) { return h.matrix().squaredNorm(); }

// Frechet derivative of exp at K in direction G (Daleckii-Krein).
ComplexMatrix exp_derivative(const EigenSystem& es, const ComplexMatrix& g) {
  const RealVector& k = es.eigenvalues;
  const ComplexMatrix& v = es.eigenvectors;
  ComplexMatrix gt = v.adjoint() * g * v;
  for (Index i = 0; i < k.size(); ++i) {
    for (Index j = 0; j < k.size(); ++j) {
      const double diff = k(i) - k(j);
      const double dd = diff == 0.0 ? std::exp(k(j)) : std::exp(k(j)) * std::expm1(diff) / diff;
      gt(i, j) *= dd;
    }
  }
  return v * gt * v.adjoint();
}

}  // namespace

HermitianOperator hermitian_exp(const HermitianOperator& h) {
  const EigenSystem es = eig_hermitian(h);
  return rebuild(es, es.eigenvalues.array().exp().matrix());
}

HermitianOperator faithful_log(const PositiveFunctional& p) {
  require_faithful(p, "the functional");
  const EigenSystem& es = p.spectrum();
  return rebuild(es, es.eigenvalues.array().log().matrix());
}

double log_trace_exp(const HermitianOperator& h) {
  const RealVector ev = eig_hermitian(h).eigenvalues;
  const double top = ev.maxCoeff();
  return top + std::log((ev.array() - top).exp().sum());
}

PerturbedState perturbed_state(const PositiveFunctional& phi, const HermitianOperator& h) {
  require_same_dim(phi, h);
  require_faithful(phi, "phi");
  PerturbedState out;
  out.base = phi;
  out.h = h;
  if (h.matrix().isZero(0.0)) {
    // exp(log phi) = phi; skip the round trip through the eigenbasis.
    out.result = phi;
    out.log_partition = std::log(phi.trace());
    return out;
  }
  const HermitianOperator generator = faithful_log(phi) + h;
  out.result = make_functional(hermitian_exp(generator));
  out.log_partition = log_trace_exp(generator);
  return out;
}

DecompositionCheck entropy_decomposition_check(const PositiveFunctional& rho, const PositiveFunctional& phi,
                                               const HermitianOperator& h) {
  const PerturbedState omega = perturbed_state(phi, h);
  DecompositionCheck out;
  const double d_omega = relative_entropy(rho, omega.result);
  out.rhs = relative_entropy(rho, phi);
  out.lhs = is_plus_inf(d_omega) ? kInf : d_omega + rho.expectation(h);
  if (std::isinf(out.lhs) || std::isinf(out.rhs)) {
    out.residual = out.lhs == out.rhs ? 0.0 : kInf;
  } else {
    out.residual = std::abs(out.lhs - out.rhs);
  }
  return out;
}

double petz_objective(const PositiveFunctional& omega, const PositiveFunctional& phi, const HermitianOperator& h) {
  require_same_dim(phi, h);
  return omega.expectation(h) - log_trace_exp(faithful_log(phi) + h);
}

PetzResult petz_variational_entropy(const PositiveFunctional& omega, const PositiveFunctional& phi,
                                    const PetzOptions& options) {
  if (omega.dim() != phi.dim()) throw Error(ErrorKind::DimensionError, "omega and phi differ in dimension");
  if (std::abs(omega.trace() - 1.0) > 1e-10) throw Error(ErrorKind::DomainError, "omega must be normalized");
  require_faithful(phi, "phi");
  const Index d = omega.dim();
  const HermitianOperator log_phi = faithful_log(phi);

  PetzResult out;
  HermitianOperator h = HermitianOperator::zero(d);
  if (options.start == PetzStart::LogRatio) {
    PositiveFunctional start = omega;
    if (!omega.is_faithful()) {
      const double eps = options.regularization;
      start = make_functional((omega.op() + HermitianOperator::identity(d) * eps) *
                              (1.0 / (1.0 + static_cast<double>(d) * eps)));
      out.regularized = true;
    }
    h = faithful_log(start) - log_phi;
  }

  // Value and gradient omega - exp(log phi + h) / Z share one eigendecomposition.
  auto evaluate = [&](const HermitianOperator& x, HermitianOperator* grad) {
    const HermitianOperator gen = log_phi + x;
    const EigenSystem es = eig_hermitian(gen);
    const double top = es.eigenvalues.maxCoeff();
    const RealVector shifted = (es.eigenvalues.array() - top).exp().matrix();
    const double z = shifted.sum();
    if (grad != nullptr) *grad = omega.op() - rebuild(es, shifted / z);
    return omega.expectation(x) - (top + std::log(z));
  };

  HermitianOperator grad;
  double value = evaluate(h, &grad);
  out.history.push_back(value);
  double step = 1.0;
  HermitianOperator prev_h;
  HermitianOperator prev_grad;
  int k = 0;
  for (; k < options.max_iters; ++k) {
    const double gnorm_sq = frobenius_sq(grad);
    if (std::sqrt(gnorm_sq) <= options.gradient_tolerance) {
      out.converged = true;
      break;
    }
    if (k > 0) {
      // Barzilai-Borwein step for ascent on a concave function.
      const HermitianOperator sh = h - prev_h;
      const HermitianOperator yg = grad - prev_grad;
      const double sy = -sh.trace_product(yg);
      if (sy > 0.0) step = std::clamp(frobenius_sq(sh) / sy, 1e-6, 1e6);
    }
    HermitianOperator trial_grad;
    double trial_value = 0.0;
    HermitianOperator trial;
    int backtracks = 0;
    while (true) {
      trial = h + grad * step;
      trial_value = evaluate(trial, &trial_grad);
      if (trial_value >= value + 1e-4 * step * gnorm_sq || backtracks > 60) break;
      step *= 0.5;
      ++backtracks;
    }
    if (trial_value < value) break;  // no further progress at double precision
    prev_h = h;
    prev_grad = grad;
    h = trial;
    grad = trial_grad;
    value = trial_value;
    out.history.push_back(value);
  }
  if (!out.converged && std::sqrt(frobenius_sq(grad)) <= options.gradient_tolerance) out.converged = true;
  out.value = value;
  out.maximizer = h;
  out.iterations = k;
  return out;
}

double umegaki_check(const PositiveFunctional& omega, const PositiveFunctional& phi) {
  const double spectral = relative_entropy(omega, phi);
  const double direct = umegaki_entropy(omega, phi);
  if (std::isinf(spectral) || std::isinf(direct)) return spectral == direct ? 0.0 : kInf;
  return std::abs(spectral - direct);
}

double umegaki_check(const PositiveFunctional& phi, const HermitianOperator& h) {
  return umegaki_check(perturbed_state(phi, h).result, phi);
}

GibbsMinimum gibbs_minimum(const PositiveFunctional& phi, const HermitianOperator& h, int max_iters,
                           double gradient_tolerance) {
  require_same_dim(phi, h);
  const Index d = phi.dim();
  const HermitianOperator log_phi = faithful_log(phi);

  GibbsMinimum out;
  out.closed_form = -log_trace_exp(log_phi - h);

  struct Eval {
    double value;
    HermitianOperator grad;
    EigenSystem es;
  };
  // F(K) = rho_K(h + K - log phi) - log Z_K with rho_K = e^K / Z_K.
  auto evaluate = [&](const HermitianOperator& k) {
    Eval e;
    e.es = eig_hermitian(k);
    const double top = e.es.eigenvalues.maxCoeff();
    // Work with e^{K - top} throughout; the gradient is invariant under the shift.
    EigenSystem shifted = e.es;
    shifted.eigenvalues.array() -= top;
    const RealVector w = shifted.eigenvalues.array().exp().matrix();
    const double z = w.sum();
    const HermitianOperator rho = rebuild(shifted, w / z);
    const HermitianOperator g = h + k - log_phi;
    const double rg = rho.trace_product(g);
    e.value = rg - (top + std::log(z));
    const ComplexMatrix dexp = exp_derivative(shifted, g.matrix());
    e.grad = HermitianOperator::symmetrize((dexp - rg * rebuild(shifted, w).matrix()) / z);
    return e;
  };

  HermitianOperator k = HermitianOperator::zero(d);
  Eval cur = evaluate(k);
  double step = 1.0;
  HermitianOperator prev_k;
  HermitianOperator prev_grad;
  int it = 0;
  for (; it < max_iters; ++it) {
    const double gnorm_sq = frobenius_sq(cur.grad);
    if (std::sqrt(gnorm_sq) <= gradient_tolerance) {
      out.converged = true;
      break;
    }
    if (it > 0) {
      const HermitianOperator sk = k - prev_k;
      const HermitianOperator yg = cur.grad - prev_grad;
      const double sy = sk.trace_product(yg);
      if (sy > 0.0) step = std::clamp(frobenius_sq(sk) / sy, 1e-6, 1e6);
    }
    Eval next;
    HermitianOperator trial;
    int backtracks = 0;
    while (true) {
      trial = k - cur.grad * step;
      next = evaluate(trial);
      if (next.value <= cur.value - 1e-4 * step * gnorm_sq || backtracks > 60) break;
      step *= 0.5;
      ++backtracks;
    }
    // No further decrease is representable; the gradient is at its roundoff floor.
    if (next.value >= cur.value) break;
    prev_k = k;
    prev_grad = cur.grad;
    k = trial;
    cur = std::move(next);
  }
  if (!out.converged && std::sqrt(frobenius_sq(cur.grad)) <= gradient_tolerance) out.converged = true;
  out.value = cur.value;
  out.iterations = it;
  const HermitianOperator ek = hermitian_exp(k);
  out.minimizer = make_functional(ek * (1.0 / ek.trace()));
  return out;
}

}  // namespace divlab

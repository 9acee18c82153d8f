#pragma once

// Perturbations phi^h = exp(log phi + h) of a faithful functional by a bounded
// self-adjoint h, and the variational formulas built on them.

#include "divlab/states.hpp"

#include <vector>

namespace divlab {

struct PerturbedState {
  PositiveFunctional base;
  HermitianOperator h;
  PositiveFunctional result;
  double log_partition = 0.0;  // log Tr exp(log base + h)
};

/// exp(H) for Hermitian H (spectral).
HermitianOperator hermitian_exp(const HermitianOperator& h);
/// log of a faithful functional; NotFaithful otherwise.
HermitianOperator faithful_log(const PositiveFunctional& p);
/// log Tr exp(H), evaluated with a max shift.
double log_trace_exp(const HermitianOperator& h);

PerturbedState perturbed_state(const PositiveFunctional& phi, const HermitianOperator& h);

struct DecompositionCheck {
  double lhs = 0.0;  // D(rho||omega) + rho(h)
  double rhs = 0.0;  // D(rho||phi)
  double residual = 0.0;
};

/// D(rho||phi^h) = -rho(h) + D(rho||phi); both sides are +inf together
/// exactly when s(rho) escapes s(phi), which cannot happen for faithful phi.
DecompositionCheck entropy_decomposition_check(const PositiveFunctional& rho, const PositiveFunctional& phi,
                                               const HermitianOperator& h);

/// g(h) = omega(h) - log Tr exp(log phi + h).
double petz_objective(const PositiveFunctional& omega, const PositiveFunctional& phi, const HermitianOperator& h);

enum class PetzStart {
  LogRatio,  // h0 = log omega' - log phi, omega' = omega or its full-rank regularization
  Zero,
};

struct PetzOptions {
  int max_iters = 500;
  double gradient_tolerance = 1e-9;
  PetzStart start = PetzStart::LogRatio;
  double regularization = 1e-9;
};

struct PetzResult {
  double value = 0.0;
  HermitianOperator maximizer;
  int iterations = 0;
  bool converged = false;
  /// True when omega was singular and had to be regularized for the start point.
  bool regularized = false;
  /// g at every iterate, starting point included.
  std::vector<double> history;
};

/// Ascent on g; every iterate gives a lower bound for D(omega||phi).
PetzResult petz_variational_entropy(const PositiveFunctional& omega, const PositiveFunctional& phi,
                                    const PetzOptions& options = {});

/// |S_{t log t}(omega||phi) - Tr omega (log omega - log phi)|.
double umegaki_check(const PositiveFunctional& omega, const PositiveFunctional& phi);
/// The same for omega = phi^h.
double umegaki_check(const PositiveFunctional& phi, const HermitianOperator& h);

struct GibbsMinimum {
  double value = 0.0;        // minimized rho(h) + D(rho||phi) over states
  double closed_form = 0.0;  // -log Tr exp(log phi - h)
  PositiveFunctional minimizer;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes rho(h) + D(rho||phi) over states rho = e^K / Tr e^K by gradient
/// descent in K from K = 0, for comparison with the closed form.
GibbsMinimum gibbs_minimum(const PositiveFunctional& phi, const HermitianOperator& h, int max_iters = 2000,
                           double gradient_tolerance = 1e-7);

}  // namespace divlab

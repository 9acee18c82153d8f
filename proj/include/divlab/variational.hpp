#pragma once

// S_f(rho||sigma) as a supremum over truncation levels n of
//
//   V(n) = f_n(0+) Tr sigma + f_n'(inf) Tr rho - int (1+s) m(s) dnu_n(s),
//
// where m(s) = min_x sigma((1-x)^*(1-x)) + s^{-1} rho(x x^*) is available in
// closed form from the modular spectrum.

#include "divlab/divergence.hpp"

#include <vector>

namespace divlab {

enum class InnerSolver { ClosedForm, Numeric };

/// m(s) = sum_ij w_ij a_i b_j / (a_i + s b_j).
double inner_minimum(const ModularSpectrum& spec, double s);

enum class NumericMode {
  Direct,             // least squares on the vectorized stationarity equation
  ConjugateGradient,  // iterative; raises OptimizationError on non-convergence
};

struct InnerMinimizer {
  double value = 0.0;
  ComplexMatrix x;
  int iterations = 0;
};

/// Minimizes Tr((1-x) D_sigma (1-x)^*) + s^{-1} Tr(x^* D_rho x) over all complex x
/// without using the eigendecompositions of rho and sigma.
InnerMinimizer inner_minimum_numeric(const PositiveFunctional& rho, const PositiveFunctional& sigma, double s,
                                     NumericMode mode = NumericMode::Direct, int iters = 500);

/// Objective value of the inner problem at a given x.
double inner_objective(const PositiveFunctional& rho, const PositiveFunctional& sigma, double s,
                       const ComplexMatrix& x);

struct VariationalOptions {
  int n_max = 1 << 14;
  InnerSolver inner_solver = InnerSolver::ClosedForm;
  /// V(n) above this while still rising at n_max is reported as +inf.
  double divergence_ceiling = 1e12;
};

struct VariationalReport {
  std::vector<int> n_schedule;
  std::vector<double> values;
  InnerSolver inner_solver = InnerSolver::ClosedForm;
  long long quadrature_nodes = 0;
  bool monotone = true;
  bool declared_infinite = false;
};

struct VariationalResult {
  double value = 0.0;
  VariationalReport report;
};

/// V(n). `nodes`, when given, accumulates the number of inner-minimum evaluations.
double variational_value_at_n(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                              const PositiveFunctional& sigma, int n,
                              InnerSolver solver = InnerSolver::ClosedForm, long long* nodes = nullptr);
double variational_value_at_n(const ConvexFunctionSpec& f, const ModularSpectrum& spec, int n,
                              long long* nodes = nullptr);

VariationalResult variational_Sf(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                                 const PositiveFunctional& sigma, const VariationalOptions& options = {});

/// The specialization of V(n) to f = -log t in closed form:
///   Tr sigma ln n + (Tr sigma - Tr rho) 2/(n+1) - sum w b ln(n (n a + b) / (a + n b)).
/// Equal to variational_value_at_n(neg_log, rho, sigma, n); tends to D(sigma||rho).
double kosaki_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma, int n);

/// True when the last increments of a doubling schedule do not shrink, the
/// signature of logarithmic or faster growth.
bool looks_divergent(const std::vector<double>& values, double ceiling);

}  // namespace divlab

#pragma once

#include "divlab/random.hpp"
#include "divlab/states.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <initializer_list>

namespace testing {

using namespace divlab;

inline PositiveFunctional diag_state(std::initializer_list<double> d) {
  return make_functional(HermitianOperator::diagonal(d));
}

inline PositiveFunctional from_real(const RealMatrix& m) { return make_functional(HermitianOperator::from_real(m)); }

inline PositiveFunctional plus_state() {
  RealMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return from_real(m);
}

// Schur-based matrix functions, independent of the eigendecomposition path.
inline ComplexMatrix oracle_log(const ComplexMatrix& m) { return m.log(); }
inline ComplexMatrix oracle_pow(const ComplexMatrix& m, double p) { return m.pow(p); }

/// Tr rho (log rho - log sigma) for faithful rho and sigma.
inline double oracle_relative_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma) {
  const ComplexMatrix& r = rho.op().matrix();
  return std::real((r * (oracle_log(r) - oracle_log(sigma.op().matrix()))).trace());
}

/// Tr rho^alpha sigma^(1-alpha) for faithful rho and sigma.
inline double oracle_q(const PositiveFunctional& rho, const PositiveFunctional& sigma, double alpha) {
  return std::real((oracle_pow(rho.op().matrix(), alpha) * oracle_pow(sigma.op().matrix(), 1.0 - alpha)).trace());
}

inline Rng rng_for(std::uint64_t trial, std::uint64_t label = 99) { return trial_rng(20241016, trial, label); }

}  // namespace testing

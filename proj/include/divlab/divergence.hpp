#pragma once

#include "divlab/fclass.hpp"
#include "divlab/states.hpp"

#include <vector>

namespace divlab {

struct SpectralPair {
  double a = 0.0;  // eigenvalue of rho, > 0
  double b = 0.0;  // eigenvalue of sigma, > 0
  double w = 0.0;  // Tr(P_a Q_b)
};

/// Joint spectral data of the relative modular operator of (rho, sigma):
/// mass b w at the point a/b, plus the masses that escape to 0 and to +inf.
struct ModularSpectrum {
  RealVector a;     // positive eigenvalues of rho
  RealVector b;     // positive eigenvalues of sigma
  RealMatrix w;     // a.size() x b.size() overlaps
  double sigma_off_mass = 0.0;  // sigma(1 - s(rho))
  double rho_off_mass = 0.0;    // rho(1 - s(sigma))
  double rho_trace = 0.0;
  double sigma_trace = 0.0;

  /// Pairs with w above the noise cutoff.
  std::vector<SpectralPair> pairs() const;
};

ModularSpectrum relative_modular_spectrum(const PositiveFunctional& rho, const PositiveFunctional& sigma);

double standard_f_divergence(const ConvexFunctionSpec& f, const ModularSpectrum& spec);
double standard_f_divergence(const ConvexFunctionSpec& f, const PositiveFunctional& rho,
                             const PositiveFunctional& sigma);

double classical_f_divergence(const ConvexFunctionSpec& f, const ClassicalDistribution& phi,
                              const ClassicalDistribution& psi);

/// D(rho||sigma) = S_{t log t}(rho||sigma).
double relative_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma);

/// Tr rho (log rho - log sigma), +inf unless s(rho) <= s(sigma). Computed from
/// matrix logarithms rather than the spectral pairs.
double umegaki_entropy(const PositiveFunctional& rho, const PositiveFunctional& sigma);

}  // namespace divlab

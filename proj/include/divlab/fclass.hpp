#pragma once

// Operator convex functions on (0, inf) and their integral representations
//
//   f(t) = a + b(t-1) + c(t-1)^2 + d(t-1)^2/t + int_{(0,inf)} (t-1)^2/(t+s) dmu(s),
//
// together with the transpose f~(t) = t f(1/t) and the truncations f_n that
// cut mu to [1/n, n].

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace divlab {

struct Atom {
  double location = 0.0;  // s > 0
  double mass = 0.0;      // > 0
};

/// Power-law behaviour of a density: ~ s^exponent_at_zero as s -> 0 and
/// ~ s^exponent_at_infinity as s -> inf. Decides which mu-integrals are finite.
struct DensityTails {
  double exponent_at_zero = 0.0;
  double exponent_at_infinity = -2.0;
};

struct IntegralRepresentation {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  // >= 0
  double d = 0.0;  // >= 0, the mass of mu at 0
  std::vector<Atom> atoms;
  /// dmu/ds on (0, inf); empty when mu is purely atomic.
  std::function<double(double)> density;
  DensityTails tails;
  /// Locations in s where the density changes character; quadrature splits there.
  std::vector<double> breakpoints;

  bool has_density() const noexcept { return static_cast<bool>(density); }

  /// The right-hand side of the representation at t > 0.
  double reconstruct(double t) const;
  /// f(0+) implied by the representation (may be +inf).
  double zero_limit() const;
  /// f'(+inf) implied by the representation (may be +inf).
  double slope_at_infinity() const;
  /// int (1+s)^{-1} dmu(s) over (0, inf); +inf when the tails forbid it.
  double integrability_norm() const;
  /// int_{[lo, hi]} weight(s) dmu(s): atoms in the closed interval plus quadrature
  /// of the density part.
  double measure_integral(const std::function<double(double)>& weight, double lo, double hi) const;
};

struct ConvexFunctionSpec {
  std::string name;
  std::function<double(double)> eval;
  /// (a, b) -> b f(a/b) for a, b > 0, evaluated without forming a/b where the
  /// catalog knows how. Empty means b * eval(a / b).
  std::function<double(double, double)> perspective;
  double f_at_zero_plus = 0.0;      // in (-inf, +inf]
  double fprime_at_infinity = 0.0;  // in (-inf, +inf]
  std::optional<IntegralRepresentation> representation;

  double operator()(double t) const { return eval(t); }
  /// b f(a/b) for a, b > 0.
  double weighted(double a, double b) const;
  /// True when f is affine (c = d = 0, mu = 0).
  bool is_affine() const;
};

/// Names accepted by catalog_lookup: neg_log, t_log_t, power (with alpha),
/// square_dev, square_dev_over_t, hellinger.
ConvexFunctionSpec catalog_lookup(const std::string& name, std::optional<double> param = std::nullopt);

/// Parses the command-line form "name" or "power:<alpha>".
ConvexFunctionSpec catalog_from_string(const std::string& text);

/// The six catalog entries with the given exponent for the power family.
std::vector<ConvexFunctionSpec> standard_catalog(double power_alpha = 0.5);

/// a + b(t - 1), represented exactly.
ConvexFunctionSpec affine_function(double a, double b);

/// f~(t) = t f(1/t); requires a representation.
ConvexFunctionSpec transpose(const ConvexFunctionSpec& f);

struct RepresentationCheck {
  double max_abs_error = 0.0;
  /// max |error| / max(1, |f(t)|) over the grid.
  double max_scaled_error = 0.0;
  double worst_t = 0.0;
  bool boundary_consistent = true;
  bool integrable = true;
};

std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Reconstructs f on the grid from its representation and compares with eval;
/// also cross-checks f(0+) and f'(inf) against the representation.
RepresentationCheck validate_representation(const ConvexFunctionSpec& f, std::span<const double> grid);
RepresentationCheck validate_representation(const ConvexFunctionSpec& f);

struct TruncationData {
  int n = 1;
  double fn_at_zero_plus = 0.0;
  double fn_prime_at_infinity = 0.0;
  std::vector<Atom> nu_atoms;
  /// dnu_n/ds on [1/n, n]; empty when the density part of mu vanishes.
  std::function<double(double)> nu_density;
  std::vector<double> breakpoints;
  IntegralRepresentation base;

  double lower() const noexcept { return 1.0 / n; }
  double upper() const noexcept { return static_cast<double>(n); }
};

TruncationData truncate(const ConvexFunctionSpec& f, int n);

/// f_n(t) from the truncated representation.
double truncated_eval(const TruncationData& trunc, double t);

/// h_n(t) = int t(1+s)/(t+s) dnu_n(s).
double h_n_evaluate(const TruncationData& trunc, double t);

/// int g(s) dnu_n(s) over [1/n, n] (atoms plus density).
double nu_integral(const TruncationData& trunc, const std::function<double(double)>& g);

}  // namespace divlab

#pragma once

#include "divlab/spectral.hpp"

#include "json.hpp"

#include <filesystem>
#include <vector>

namespace divlab {

/// A positive semidefinite operator standing for a (possibly unnormalized,
/// possibly singular) positive functional x -> Tr(D x). Small negative
/// eigenvalues within tol_psd are clipped to zero on construction.
class PositiveFunctional {
 public:
  PositiveFunctional() = default;

  const HermitianOperator& op() const noexcept { return op_; }
  const EigenSystem& spectrum() const noexcept { return spectrum_; }
  Index dim() const noexcept { return op_.dim(); }
  double trace() const noexcept { return trace_; }

  /// Expectation value Tr(D x) for Hermitian x.
  double expectation(const HermitianOperator& x) const { return op_.trace_product(x); }

  PositiveFunctional scaled(double factor) const;
  /// Throws DomainError for the zero functional.
  PositiveFunctional normalized() const;
  /// Orthogonal projection onto the support.
  HermitianOperator support() const;
  bool is_faithful() const;

  friend PositiveFunctional make_functional(const HermitianOperator& h);

 private:
  HermitianOperator op_;
  EigenSystem spectrum_;
  double trace_ = 0.0;
};

PositiveFunctional make_functional(const HermitianOperator& h);

/// Block-diagonal p (+) q.
PositiveFunctional direct_sum(const PositiveFunctional& p, const PositiveFunctional& q);

/// e p e restricted to the range of the projection e (dimension = rank e).
PositiveFunctional compress(const PositiveFunctional& p, const HermitianOperator& e);

/// Nonnegative weight vector, possibly unnormalized.
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> weights);

  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double total() const;

 private:
  std::vector<double> weights_;
};

// State files: {"dim": d, "re": [[...]], "im": [[...]]}; "im" is optional.
PositiveFunctional state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const PositiveFunctional& p);
PositiveFunctional read_state_file(const std::filesystem::path& path);

ComplexMatrix complex_matrix_from_json(const nlohmann::json& re, const nlohmann::json* im);
nlohmann::json real_part_to_json(const ComplexMatrix& m);
nlohmann::json imag_part_to_json(const ComplexMatrix& m);

}  // namespace divlab

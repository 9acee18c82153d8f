#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace divlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tolerance {
/// Eigenvalues at or below this fraction of the largest one count as zero.
inline constexpr double kSupport = 1e-10;
/// Eigenvalues below -kPsd * ||H||_F reject positivity.
inline constexpr double kPsd = 1e-10;
/// Allowed asymmetry |H_jk - conj(H_kj)| of constructor input.
inline constexpr double kHermitian = 1e-12;
/// Residual allowed when checking projections and resolutions of the identity.
inline constexpr double kProjection = 1e-10;
}  // namespace tolerance

/// Self-adjoint d x d complex matrix. Input is symmetrized on construction, so
/// the stored matrix is exactly Hermitian.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator from_real(const RealMatrix& m);
  static HermitianOperator identity(Index dim);
  static HermitianOperator zero(Index dim);
  static HermitianOperator diagonal(const RealVector& d);
  static HermitianOperator diagonal(std::initializer_list<double> d);
  /// Skips the asymmetry check; for products that are Hermitian up to roundoff.
  static HermitianOperator symmetrize(const ComplexMatrix& m);

  Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(Index r, Index c) const { return m_(r, c); }

  double trace() const { return m_.diagonal().real().sum(); }
  double frobenius_norm() const { return m_.norm(); }
  /// Re Tr(this * other).
  double trace_product(const HermitianOperator& other) const;

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;
  /// U H U^* for any d_out x d matrix U.
  HermitianOperator conjugated_by(const ComplexMatrix& u) const;

 private:
  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

struct EigenSystem {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

enum class ZeroPolicy {
  MapZeroToZero,  // eigenvalues below the support tolerance map to 0
  ApplyAtZero,    // (near-)zero eigenvalues are sent to g(0)
  ErrorOnZero,    // a (near-)zero eigenvalue is a DomainError
};

using SpectralFunction = std::function<double(double)>;

EigenSystem eig_hermitian(const HermitianOperator& h);

/// Largest |eigenvalue| times the support tolerance.
double zero_threshold(const RealVector& eigenvalues);

HermitianOperator apply_spectral_function(const HermitianOperator& h, const SpectralFunction& g,
                                          ZeroPolicy policy);
HermitianOperator apply_spectral_function(const EigenSystem& es, const SpectralFunction& g,
                                          ZeroPolicy policy);

/// Projection onto eigenvectors with eigenvalue above the support tolerance.
HermitianOperator support_projection(const HermitianOperator& h);
/// Throws NotPositive if an eigenvalue is below -tol_psd.
void require_positive(const EigenSystem& es, double frobenius_norm);

bool is_projection(const HermitianOperator& e, double tol = tolerance::kProjection);

/// Sum_k e_k H e_k for an orthogonal resolution of the identity.
HermitianOperator pinch(const HermitianOperator& h, std::span<const HermitianOperator> projections);
void require_partition(std::span<const HermitianOperator> projections, Index dim);

/// Columns spanning the range of a projection.
ComplexMatrix range_basis(const HermitianOperator& projection);

}  // namespace divlab

#include "divlab/spectral.hpp"

#include "divlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace divlab {

namespace {

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, "operator has non-finite entries");
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionError, "operator must be square");
  }
  require_finite(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.size() > 0 && asym > tolerance::kHermitian * scale) {
    std::ostringstream os;
    os << "operator is not Hermitian (max asymmetry " << asym << ")";
    throw Error(ErrorKind::InvalidInput, os.str());
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::from_real(const RealMatrix& m) {
  return HermitianOperator(m.cast<Complex>());
}

HermitianOperator HermitianOperator::identity(Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return diagonal(v);
}

HermitianOperator HermitianOperator::symmetrize(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionError, "operator must be square");
  require_finite(m);
  HermitianOperator h;
  h.m_ = (m + m.adjoint()) * 0.5;
  return h;
}

double HermitianOperator::trace_product(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw Error(ErrorKind::DimensionError, "trace_product dimension mismatch");
  // Tr(AB) = sum_jk A_jk B_kj = sum_jk A_jk conj(B_jk) for Hermitian B.
  return (m_.array() * other.m_.array().conjugate()).real().sum();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw Error(ErrorKind::DimensionError, "sum of operators of different size");
  return symmetrize(m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (dim() != o.dim()) throw Error(ErrorKind::DimensionError, "difference of operators of different size");
  return symmetrize(m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const { return symmetrize(m_ * s); }

HermitianOperator HermitianOperator::conjugated_by(const ComplexMatrix& u) const {
  if (u.cols() != dim()) throw Error(ErrorKind::DimensionError, "conjugation dimension mismatch");
  return symmetrize(u * m_ * u.adjoint());
}

EigenSystem eig_hermitian(const HermitianOperator& h) {
  require_finite(h.matrix());
  if (h.dim() == 0) return {RealVector(0), ComplexMatrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalError, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double zero_threshold(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  return tolerance::kSupport * eigenvalues.cwiseAbs().maxCoeff();
}

HermitianOperator apply_spectral_function(const EigenSystem& es, const SpectralFunction& g,
                                          ZeroPolicy policy) {
  const Index n = es.eigenvalues.size();
  const double thr = zero_threshold(es.eigenvalues);
  RealVector mapped(n);
  for (Index i = 0; i < n; ++i) {
    const double lambda = es.eigenvalues(i);
    const bool is_zero = std::abs(lambda) <= thr;
    double value = 0.0;
    if (is_zero) {
      switch (policy) {
        case ZeroPolicy::MapZeroToZero: value = 0.0; break;
        case ZeroPolicy::ApplyAtZero: value = g(0.0); break;
        case ZeroPolicy::ErrorOnZero:
          throw Error(ErrorKind::DomainError, "spectral function applied to a singular operator");
      }
    } else {
      value = g(lambda);
    }
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os << "spectral function is undefined at eigenvalue " << (is_zero ? 0.0 : lambda);
      throw Error(ErrorKind::DomainError, os.str());
    }
    mapped(i) = value;
  }
  const ComplexMatrix& v = es.eigenvectors;
  return HermitianOperator::symmetrize(v * mapped.cast<Complex>().asDiagonal() * v.adjoint());
}

HermitianOperator apply_spectral_function(const HermitianOperator& h, const SpectralFunction& g,
                                          ZeroPolicy policy) {
  return apply_spectral_function(eig_hermitian(h), g, policy);
}

void require_positive(const EigenSystem& es, double frobenius_norm) {
  if (es.eigenvalues.size() == 0) return;
  const double floor = -tolerance::kPsd * frobenius_norm;
  if (es.eigenvalues(0) < floor) {
    std::ostringstream os;
    os << "operator has negative eigenvalue " << es.eigenvalues(0);
    throw Error(ErrorKind::NotPositive, os.str());
  }
}

HermitianOperator support_projection(const HermitianOperator& h) {
  const EigenSystem es = eig_hermitian(h);
  require_positive(es, h.frobenius_norm());
  return apply_spectral_function(es, [](double) { return 1.0; }, ZeroPolicy::MapZeroToZero);
}

bool is_projection(const HermitianOperator& e, double tol) {
  const ComplexMatrix& m = e.matrix();
  return (m * m - m).cwiseAbs().maxCoeff() <= tol;
}

void require_partition(std::span<const HermitianOperator> projections, Index dim) {
  if (projections.empty()) throw Error(ErrorKind::InvalidPartition, "empty partition");
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const HermitianOperator& e = projections[k];
    if (e.dim() != dim) throw Error(ErrorKind::InvalidPartition, "projection has wrong dimension");
    if (!is_projection(e)) throw Error(ErrorKind::InvalidPartition, "partition element is not a projection");
    for (std::size_t l = k + 1; l < projections.size(); ++l) {
      if (projections[l].dim() != dim) continue;
      if ((e.matrix() * projections[l].matrix()).cwiseAbs().maxCoeff() > tolerance::kProjection) {
        throw Error(ErrorKind::InvalidPartition, "partition elements are not orthogonal");
      }
    }
    total += e.matrix();
  }
  if ((total - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > tolerance::kProjection) {
    throw Error(ErrorKind::InvalidPartition, "projections do not sum to the identity");
  }
}

HermitianOperator pinch(const HermitianOperator& h, std::span<const HermitianOperator> projections) {
  require_partition(projections, h.dim());
  ComplexMatrix out = ComplexMatrix::Zero(h.dim(), h.dim());
  for (const HermitianOperator& e : projections) out += e.matrix() * h.matrix() * e.matrix();
  return HermitianOperator::symmetrize(out);
}

ComplexMatrix range_basis(const HermitianOperator& projection) {
  const EigenSystem es = eig_hermitian(projection);
  std::vector<Index> keep;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > 0.5) keep.push_back(i);
  }
  ComplexMatrix basis(projection.dim(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Index>(c)) = es.eigenvectors.col(keep[c]);
  return basis;
}

}  // namespace divlab

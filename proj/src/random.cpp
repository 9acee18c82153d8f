#include "divlab/random.hpp"

#include "divlab/errors.hpp"

#include <Eigen/QR>

namespace divlab {

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t label) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(label)};
  return Rng(seq);
}

ComplexMatrix complex_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  // Filled row by row so the draw order does not depend on Eigen's storage order.
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = qr.matrixQR()(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

HermitianOperator random_hermitian(Index dim, Rng& rng, double scale) {
  const ComplexMatrix g = complex_gaussian(dim, dim, rng);
  return HermitianOperator::symmetrize((g + g.adjoint()) * (0.5 * scale));
}

PositiveFunctional random_state(Index dim, Rng& rng, Index rank) {
  if (rank < 0) rank = dim;
  if (rank < 1 || rank > dim) throw Error(ErrorKind::DomainError, "rank must lie in [1, dim]");
  const ComplexMatrix g = complex_gaussian(dim, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return make_functional(HermitianOperator::symmetrize(m));
}

PositiveFunctional random_faithful_state(Index dim, Rng& rng, double mix) {
  if (!(mix > 0.0 && mix <= 1.0)) throw Error(ErrorKind::DomainError, "mix must lie in (0, 1]");
  const PositiveFunctional base = random_state(dim, rng);
  const ComplexMatrix m = (1.0 - mix) * base.op().matrix() +
                          (mix / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
  return make_functional(HermitianOperator::symmetrize(m));
}

HermitianOperator random_projection(Index dim, Index rank, Rng& rng) {
  if (rank < 0 || rank > dim) throw Error(ErrorKind::DomainError, "rank must lie in [0, dim]");
  const ComplexMatrix u = random_unitary(dim, rng);
  const ComplexMatrix cols = u.leftCols(rank);
  return HermitianOperator::symmetrize(cols * cols.adjoint());
}

}  // namespace divlab

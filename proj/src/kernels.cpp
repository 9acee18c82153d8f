#include "divlab/kernels.hpp"

#include <vector>

namespace divlab::kernels {

namespace {

double row_pair_sum(const RealVector& b, const RealMatrix& w, Index i, double ai, const PairTerm& term) {
  double row = 0.0;
  for (Index j = 0; j < b.size(); ++j) {
    const double wij = w(i, j);
    if (wij >= kWeightCutoff) row += wij * term(ai, b[j]);
  }
  return row;
}

double row_inner(const RealVector& b, const RealMatrix& w, Index i, double ai, double s) {
  double row = 0.0;
  for (Index j = 0; j < b.size(); ++j) {
    const double wij = w(i, j);
    if (wij >= kWeightCutoff) row += wij * ai * b[j] / (ai + s * b[j]);
  }
  return row;
}

double ordered_total(const std::vector<double>& rows) {
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

}  // namespace

namespace serial {

RealMatrix overlap_weights(const ComplexMatrix& p, const ComplexMatrix& q) {
  RealMatrix w(p.cols(), q.cols());
  for (Index i = 0; i < p.cols(); ++i) {
    for (Index j = 0; j < q.cols(); ++j) w(i, j) = std::norm(p.col(i).dot(q.col(j)));
  }
  return w;
}

double pair_sum(const RealVector& a, const RealVector& b, const RealMatrix& w, const PairTerm& term) {
  std::vector<double> rows(static_cast<std::size_t>(a.size()));
  for (Index i = 0; i < a.size(); ++i) rows[i] = row_pair_sum(b, w, i, a[i], term);
  return ordered_total(rows);
}

double inner_minimum(const RealVector& a, const RealVector& b, const RealMatrix& w, double s) {
  std::vector<double> rows(static_cast<std::size_t>(a.size()));
  for (Index i = 0; i < a.size(); ++i) rows[i] = row_inner(b, w, i, a[i], s);
  return ordered_total(rows);
}

}  // namespace serial

namespace parallel {

RealMatrix overlap_weights(const ComplexMatrix& p, const ComplexMatrix& q) {
  const Index rows = p.cols();
  const Index cols = q.cols();
  RealMatrix w(rows, cols);
#pragma omp parallel for schedule(static) if (rows * cols >= kParallelThreshold)
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) w(i, j) = std::norm(p.col(i).dot(q.col(j)));
  }
  return w;
}

double pair_sum(const RealVector& a, const RealVector& b, const RealMatrix& w, const PairTerm& term) {
  const Index n = a.size();
  std::vector<double> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n * b.size() >= kParallelThreshold)
  for (Index i = 0; i < n; ++i) rows[i] = row_pair_sum(b, w, i, a[i], term);
  return ordered_total(rows);
}

double inner_minimum(const RealVector& a, const RealVector& b, const RealMatrix& w, double s) {
  const Index n = a.size();
  std::vector<double> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n * b.size() >= kParallelThreshold)
  for (Index i = 0; i < n; ++i) rows[i] = row_inner(b, w, i, a[i], s);
  return ordered_total(rows);
}

}  // namespace parallel

}  // namespace divlab::kernels

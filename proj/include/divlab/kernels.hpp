#pragma once

// Dense inner loops shared by the divergence, variational and Renyi code.
// Each kernel has a serial reference and an OpenMP version; the parallel
// versions reduce in the same order as the serial ones, so both return
// bitwise-identical results.

#include "divlab/spectral.hpp"

#include <functional>

namespace divlab::kernels {

/// Overlaps below this are eigenvector noise and are skipped by the pair sums.
inline constexpr double kWeightCutoff = 1e-14;

/// term(a, b) for a > 0, b > 0.
using PairTerm = std::function<double(double, double)>;

namespace serial {
/// W_ij = |<p_i|q_j>|^2 for the columns of p and q.
RealMatrix overlap_weights(const ComplexMatrix& p, const ComplexMatrix& q);
/// sum_ij w_ij term(a_i, b_j) over entries with w_ij >= kWeightCutoff.
double pair_sum(const RealVector& a, const RealVector& b, const RealMatrix& w, const PairTerm& term);
/// sum_ij w_ij a_i b_j / (a_i + s b_j), the closed-form inner minimum.
double inner_minimum(const RealVector& a, const RealVector& b, const RealMatrix& w, double s);
}  // namespace serial

namespace parallel {
RealMatrix overlap_weights(const ComplexMatrix& p, const ComplexMatrix& q);
double pair_sum(const RealVector& a, const RealVector& b, const RealMatrix& w, const PairTerm& term);
double inner_minimum(const RealVector& a, const RealVector& b, const RealMatrix& w, double s);
}  // namespace parallel

/// Below this many pairs the parallel kernels run on one thread.
inline constexpr Index kParallelThreshold = 256;

}  // namespace divlab::kernels

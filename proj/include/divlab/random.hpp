#pragma once

#include "divlab/states.hpp"

#include <cstdint>
#include <random>

namespace divlab {

using Rng = std::mt19937_64;

/// Independent stream for (master seed, trial, label); the same triple always
/// yields the same stream regardless of thread scheduling.
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t label = 0);

/// Entries i.i.d. with independent standard normal real and imaginary parts.
ComplexMatrix complex_gaussian(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary.
ComplexMatrix random_unitary(Index dim, Rng& rng);

/// Hermitian with entries of order `scale`.
HermitianOperator random_hermitian(Index dim, Rng& rng, double scale = 1.0);

/// Normalized state G G^* / Tr with G of size dim x rank (rank <= dim).
PositiveFunctional random_state(Index dim, Rng& rng, Index rank = -1);

/// Mixing weight for pairs whose eigenvalue ratios stay moderate.
inline constexpr double kWellConditionedMix = 0.25;

/// (1 - mix) * random_state + mix * I/dim: full support with smallest
/// eigenvalue at least mix/dim.
PositiveFunctional random_faithful_state(Index dim, Rng& rng, double mix = 0.1);

/// Random orthogonal projection of the given rank.
HermitianOperator random_projection(Index dim, Index rank, Rng& rng);

}  // namespace divlab

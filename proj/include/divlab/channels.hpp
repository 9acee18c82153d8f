#pragma once

#include "divlab/states.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace divlab {

/// Completely positive map rho -> sum_k K_k rho K_k^* in Kraus form.
class Channel {
 public:
  Channel() = default;
  /// All Kraus operators must share one d_out x d_in shape.
  explicit Channel(std::vector<ComplexMatrix> kraus);

  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  Index input_dim() const noexcept { return d_in_; }
  Index output_dim() const noexcept { return d_out_; }
  bool trace_preserving() const noexcept { return trace_preserving_; }
  bool unital() const noexcept { return unital_; }

  /// ||sum K^* K - I||_max and ||sum K K^* - I||_max.
  double completeness_residual() const;
  double unitality_residual() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  Index d_in_ = 0;
  Index d_out_ = 0;
  bool trace_preserving_ = false;
  bool unital_ = false;
};

PositiveFunctional apply_channel_predual(const Channel& ch, const PositiveFunctional& p);

Channel identity_channel(Index dim);
Channel unitary_channel(const ComplexMatrix& u);
/// Kraus operators are the projections themselves.
Channel pinching_channel(std::span<const HermitianOperator> projections);
/// Tr_B on C^{d_a} (x) C^{d_b} when trace_out_second, else Tr_A.
Channel partial_trace_channel(Index d_a, Index d_b, bool trace_out_second = true);

/// Seeded random CPTP map: a Haar-like isometry C^{d_in} -> C^{d_out} (x) C^k
/// from the QR factorization of a complex Gaussian matrix, cut into k blocks.
Channel random_cptp(Index d_in, Index d_out, Index kraus_count, std::uint64_t seed);

/// Restriction to the block-diagonal subalgebra sum_k e_k M e_k, i.e. pinching.
PositiveFunctional restrict_to_subalgebra(const PositiveFunctional& p, std::span<const HermitianOperator> partition);

// Channel files: {"kraus": [{"re": [[..]], "im": [[..]]}, ...]}.
Channel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const Channel& ch);
Channel read_channel_file(const std::filesystem::path& path);

}  // namespace divlab

#include "divlab/channels.hpp"

#include "divlab/errors.hpp"
#include "divlab/random.hpp"

#include <Eigen/QR>

#include <fstream>
#include <sstream>

namespace divlab {

namespace {
constexpr double kCompleteness = 1e-10;
}

Channel::Channel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::InvalidInput, "a channel needs at least one Kraus operator");
  d_out_ = kraus_.front().rows();
  d_in_ = kraus_.front().cols();
  for (const auto& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      throw Error(ErrorKind::DimensionError, "Kraus operators differ in shape");
    }
    if (!k.allFinite()) throw Error(ErrorKind::InvalidInput, "non-finite Kraus entry");
  }
  trace_preserving_ = completeness_residual() <= kCompleteness;
  unital_ = d_in_ == d_out_ && unitality_residual() <= kCompleteness;
}

double Channel::completeness_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(d_in_, d_in_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(d_in_, d_in_)).cwiseAbs().maxCoeff();
}

double Channel::unitality_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(d_out_, d_out_);
  for (const auto& k : kraus_) sum += k * k.adjoint();
  return (sum - ComplexMatrix::Identity(d_out_, d_out_)).cwiseAbs().maxCoeff();
}

PositiveFunctional apply_channel_predual(const Channel& ch, const PositiveFunctional& p) {
  if (p.dim() != ch.input_dim()) {
    std::ostringstream os;
    os << "channel expects dimension " << ch.input_dim() << ", got " << p.dim();
    throw Error(ErrorKind::DimensionError, os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.output_dim(), ch.output_dim());
  for (const auto& k : ch.kraus()) out += k * p.op().matrix() * k.adjoint();
  return make_functional(HermitianOperator::symmetrize(out));
}

Channel identity_channel(Index dim) { return Channel({ComplexMatrix::Identity(dim, dim)}); }

Channel unitary_channel(const ComplexMatrix& u) { return Channel({u}); }

Channel pinching_channel(std::span<const HermitianOperator> projections) {
  if (projections.empty()) throw Error(ErrorKind::InvalidPartition, "empty partition");
  require_partition(projections, projections.front().dim());
  std::vector<ComplexMatrix> kraus;
  for (const auto& e : projections) kraus.push_back(e.matrix());
  return Channel(std::move(kraus));
}

Channel partial_trace_channel(Index d_a, Index d_b, bool trace_out_second) {
  if (d_a < 1 || d_b < 1) throw Error(ErrorKind::DimensionError, "subsystem dimensions must be positive");
  const Index d_keep = trace_out_second ? d_a : d_b;
  const Index d_drop = trace_out_second ? d_b : d_a;
  std::vector<ComplexMatrix> kraus;
  for (Index k = 0; k < d_drop; ++k) {
    // K_k = I (x) <k| or <k| (x) I; basis index is i_a * d_b + i_b.
    ComplexMatrix m = ComplexMatrix::Zero(d_keep, d_a * d_b);
    for (Index i = 0; i < d_keep; ++i) {
      const Index col = trace_out_second ? i * d_b + k : k * d_b + i;
      m(i, col) = 1.0;
    }
    kraus.push_back(std::move(m));
  }
  return Channel(std::move(kraus));
}

Channel random_cptp(Index d_in, Index d_out, Index kraus_count, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || kraus_count < 1) {
    throw Error(ErrorKind::DimensionError, "random_cptp needs positive dimensions");
  }
  if (d_out * kraus_count < d_in) {
    throw Error(ErrorKind::DimensionError, "d_out * kraus_count must be at least d_in for an isometry");
  }
  Rng rng(seed);
  const ComplexMatrix g = complex_gaussian(d_out * kraus_count, d_in, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(g.rows(), d_in);
  // Fix the phases of R's diagonal so the distribution does not depend on the QR convention.
  const ComplexMatrix r = qr.matrixQR().topRows(d_in).triangularView<Eigen::Upper>();
  for (Index j = 0; j < d_in; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) v.col(j) *= diag / std::abs(diag);
  }
  std::vector<ComplexMatrix> kraus;
  for (Index k = 0; k < kraus_count; ++k) kraus.push_back(v.middleRows(k * d_out, d_out));
  return Channel(std::move(kraus));
}

PositiveFunctional restrict_to_subalgebra(const PositiveFunctional& p, std::span<const HermitianOperator> partition) {
  return make_functional(pinch(p.op(), partition));
}

Channel channel_from_json(const nlohmann::json& j) {
  try {
    const auto& list = j.at("kraus");
    if (!list.is_array() || list.empty()) throw Error(ErrorKind::InvalidInput, "\"kraus\" must be a non-empty array");
    std::vector<ComplexMatrix> kraus;
    for (const auto& item : list) {
      const nlohmann::json* im = item.contains("im") ? &item.at("im") : nullptr;
      kraus.push_back(complex_matrix_from_json(item.at("re"), im));
    }
    return Channel(std::move(kraus));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed channel JSON: ") + e.what());
  }
}

nlohmann::json channel_to_json(const Channel& ch) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& k : ch.kraus()) list.push_back({{"re", real_part_to_json(k)}, {"im", imag_part_to_json(k)}});
  return {{"kraus", std::move(list)}};
}

Channel read_channel_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
  return channel_from_json(j);
}

}  // namespace divlab

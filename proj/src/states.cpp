#include "divlab/states.hpp"

#include "divlab/errors.hpp"

#include <fstream>
#include <numeric>

namespace divlab {

PositiveFunctional make_functional(const HermitianOperator& h) {
  EigenSystem es = eig_hermitian(h);
  require_positive(es, h.frobenius_norm());
  PositiveFunctional p;
  bool clipped = false;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) < 0.0) {
      es.eigenvalues(i) = 0.0;
      clipped = true;
    }
  }
  if (clipped) {
    const ComplexMatrix& v = es.eigenvectors;
    p.op_ = HermitianOperator::symmetrize(v * es.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint());
  } else {
    p.op_ = h;
  }
  p.spectrum_ = std::move(es);
  p.trace_ = p.op_.trace();
  return p;
}

PositiveFunctional PositiveFunctional::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::DomainError, "functionals can only be scaled by finite nonnegative factors");
  }
  PositiveFunctional p;
  p.op_ = op_ * factor;
  p.spectrum_ = {spectrum_.eigenvalues * factor, spectrum_.eigenvectors};
  p.trace_ = p.op_.trace();
  return p;
}

PositiveFunctional PositiveFunctional::normalized() const {
  if (trace_ <= 0.0) throw Error(ErrorKind::DomainError, "cannot normalize the zero functional");
  return scaled(1.0 / trace_);
}

HermitianOperator PositiveFunctional::support() const {
  return apply_spectral_function(spectrum_, [](double) { return 1.0; }, ZeroPolicy::MapZeroToZero);
}

bool PositiveFunctional::is_faithful() const {
  if (dim() == 0) return false;
  return spectrum_.eigenvalues(0) > zero_threshold(spectrum_.eigenvalues);
}

PositiveFunctional direct_sum(const PositiveFunctional& p, const PositiveFunctional& q) {
  const Index n = p.dim() + q.dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m.topLeftCorner(p.dim(), p.dim()) = p.op().matrix();
  m.bottomRightCorner(q.dim(), q.dim()) = q.op().matrix();
  return make_functional(HermitianOperator(m));
}

PositiveFunctional compress(const PositiveFunctional& p, const HermitianOperator& e) {
  if (e.dim() != p.dim()) throw Error(ErrorKind::DimensionError, "projection and functional differ in size");
  if (!is_projection(e)) throw Error(ErrorKind::InvalidProjection, "compression requires an orthogonal projection");
  const ComplexMatrix basis = range_basis(e);
  return make_functional(HermitianOperator::symmetrize(basis.adjoint() * p.op().matrix() * basis));
}

ClassicalDistribution::ClassicalDistribution(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::InvalidInput, "classical weights must be finite and nonnegative");
    }
  }
}

double ClassicalDistribution::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

ComplexMatrix complex_matrix_from_json(const nlohmann::json& re, const nlohmann::json* im) {
  if (!re.is_array() || re.empty()) throw Error(ErrorKind::InvalidInput, "\"re\" must be a non-empty array of rows");
  const auto rows = static_cast<Index>(re.size());
  const auto cols = static_cast<Index>(re.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = re.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorKind::InvalidInput, "ragged \"re\" matrix");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = Complex(row.at(static_cast<std::size_t>(c)).get<double>(), 0.0);
  }
  if (im != nullptr) {
    if (!im->is_array() || static_cast<Index>(im->size()) != rows) {
      throw Error(ErrorKind::InvalidInput, "\"im\" shape differs from \"re\"");
    }
    for (Index r = 0; r < rows; ++r) {
      const auto& row = im->at(static_cast<std::size_t>(r));
      if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
        throw Error(ErrorKind::InvalidInput, "\"im\" shape differs from \"re\"");
      }
      for (Index c = 0; c < cols; ++c) m(r, c).imag(row.at(static_cast<std::size_t>(c)).get<double>());
    }
  }
  return m;
}

nlohmann::json real_part_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).real());
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json imag_part_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).imag());
    out.push_back(std::move(row));
  }
  return out;
}

PositiveFunctional state_from_json(const nlohmann::json& j) {
  try {
    const nlohmann::json* im = j.contains("im") ? &j.at("im") : nullptr;
    const ComplexMatrix m = complex_matrix_from_json(j.at("re"), im);
    if (j.contains("dim") && j.at("dim").get<Index>() != m.rows()) {
      throw Error(ErrorKind::InvalidInput, "\"dim\" does not match the matrix size");
    }
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "state matrix must be square");
    // Readers symmetrize: the file may carry small asymmetries from text rounding.
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
      throw Error(ErrorKind::InvalidInput, "state matrix is not Hermitian");
    }
    return make_functional(HermitianOperator::symmetrize(m));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed state JSON: ") + e.what());
  }
}

nlohmann::json state_to_json(const PositiveFunctional& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["re"] = real_part_to_json(p.op().matrix());
  j["im"] = imag_part_to_json(p.op().matrix());
  return j;
}

PositiveFunctional read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open state file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "cannot parse " + path.string() + ": " + e.what());
  }
  return state_from_json(j);
}

}  // namespace divlab

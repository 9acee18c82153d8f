#include "divlab/errors.hpp"

namespace divlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidProjection: return "InvalidProjection";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::UnsupportedFunction: return "UnsupportedFunction";
    case ErrorKind::QuadratureError: return "QuadratureError";
    case ErrorKind::OptimizationError: return "OptimizationError";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::NumericalError: return "NumericalError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

OptimizationError::OptimizationError(const std::string& message, double residual)
    : Error(ErrorKind::OptimizationError, message), residual_(residual) {}

}  // namespace divlab

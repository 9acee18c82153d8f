#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divlab {

enum class ErrorKind {
  InvalidInput,
  DomainError,
  NotPositive,
  InvalidPartition,
  InvalidProjection,
  DimensionError,
  UnsupportedFunction,
  QuadratureError,
  OptimizationError,
  NotFaithful,
  NumericalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an iterative solver stops without meeting its tolerance.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& message, double residual);

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace divlab

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdc {

enum class ErrorKind {
  NotPrime,
  ReduciblePolynomial,
  DegreeMismatch,
  FactorizationNeeded,
  NoFactorizationMatch,
  BaseNotSubfield,
  LengthMismatch,
  ElementNotInField,
  AmbientMismatch,
  NotASubspaceOf,
  BudgetExceeded,
  DimensionMismatch,
  EmptyCode,
  SingletonCode,
  RangeError,
  ConstructionVerificationFailed,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Domain error raised by every library module. The CLI maps these to exit
// code 1 and renders kind_name() in structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace cdc

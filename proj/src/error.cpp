#include "cdc/error.hpp"

namespace cdc {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::FactorizationNeeded: return "FactorizationNeeded";
    case ErrorKind::NoFactorizationMatch: return "NoFactorizationMatch";
    case ErrorKind::BaseNotSubfield: return "BaseNotSubfield";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ElementNotInField: return "ElementNotInField";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotASubspaceOf: return "NotASubspaceOf";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::SingletonCode: return "SingletonCode";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ConstructionVerificationFailed: return "ConstructionVerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cdc

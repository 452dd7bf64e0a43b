#include "fusion/error.hpp"

namespace fusion {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoDual: return "NoDual";
    case ErrorCode::AmbiguousDual: return "AmbiguousDual";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::DegenerateCombination: return "DegenerateCombination";
    case ErrorCode::SingularCharacterMatrix: return "SingularCharacterMatrix";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::DualMismatch: return "DualMismatch";
    case ErrorCode::InvariantFailed: return "InvariantFailed";
    case ErrorCode::VerlindeMismatch: return "VerlindeMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fusion

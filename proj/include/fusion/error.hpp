#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusion {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NoDual,
  AmbiguousDual,
  Overflow,
  ConvergenceFailure,
  NonCommutative,
  DegenerateCombination,
  SingularCharacterMatrix,
  NotClosed,
  ClosureViolation,
  ZeroClass,
  CapExceeded,
  TheoremViolation,
  MethodDisagreement,
  InternalInconsistency,
  ZeroEntry,
  NonIntegral,
  InvalidRing,
  UnknownName,
  ParseError,
  ValidationFailed,
  DualMismatch,
  InvariantFailed,
  VerlindeMismatch,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fusion

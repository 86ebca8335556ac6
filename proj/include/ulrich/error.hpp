#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulrich {

enum class ErrorCode {
  AsymmetricGram,
  ParityViolation,
  DimensionMismatch,
  NonIntegralGenus,
  NonIntegralChi,
  NonIntegralC2,
  MissingHypothesis,
  DegenerateForm,
  RankTooHigh,
  UnboundedSolutions,
  InvalidPolarization,
  BoxTooLarge,
  VerificationFailure,
  InvalidDegree,
  OutOfRange,
  ParseError,
  ValidationError,
  UnknownBuiltin,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Thrown by every operation of the library. `path()` names the offending
/// field (e.g. "gram", "h", "flags.non_special") when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

  /// True for codes that can only arise from a broken internal invariant
  /// (parity-guaranteed integrality failing, identity checks failing).
  bool is_internal() const noexcept;

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace ulrich

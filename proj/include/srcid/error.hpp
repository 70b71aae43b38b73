#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srcid {

enum class ErrorCode {
  InvalidSpec,
  NonFinite,
  SymmetryViolation,
  GridTooLarge,
  SingularSolve,
  GridMismatch,
  OddIntervalCount,
  DeltaExceedsDeltaM,
  NonpositiveDelta,
  DimensionMismatch,
  SliceOutOfBox,
  BoundViolation,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report the stage and the category separately.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srcid

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twospec {

enum class ErrorCode {
  NotSorted,
  SharedPoint,
  OutOfRange,
  GapOverfull,
  EmptyBand,
  NotUnitModulus,
  DegenerateAngle,
  NotCovered,
  NegativeCoefficient,
  NotPositive,
  RankDeficient,
  LengthMismatch,
  ZeroNorm,
  AlphaOutOfDisk,
  ZeroDenominator,
  DimensionTooLarge,
  InvalidDimensions,
  InvalidArgument,
  Unsupported,
  ParseError,
  Internal,
};

/// Stable upper-case name used on the wire ("SHARED_POINT", ...).
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace twospec

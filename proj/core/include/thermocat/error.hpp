#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thermocat {

enum class ErrorCode {
  NotADistribution,
  DomainError,
  SupportError,
  DimensionMismatch,
  OverflowToInfinity,
  FullRankRequired,
  NotRational,
  NotSorted,
  InvalidM,
  DegenerateRemainder,
  ScheduleViolation,
  AlphaOne,
  OddDimension,
  EpsilonTooLarge,
  ChiOutOfRange,
  LambdaOutOfRange,
  TargetUnreachable,
};

/// Stable identifier for an error code, e.g. "EpsilonTooLarge".
std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// front ends can report the precise condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace thermocat

#include "thermocat/error.hpp"

namespace thermocat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SupportError: return "SupportError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OverflowToInfinity: return "OverflowToInfinity";
    case ErrorCode::FullRankRequired: return "FullRankRequired";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::DegenerateRemainder: return "DegenerateRemainder";
    case ErrorCode::ScheduleViolation: return "ScheduleViolation";
    case ErrorCode::AlphaOne: return "AlphaOne";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::ChiOutOfRange: return "ChiOutOfRange";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace thermocat

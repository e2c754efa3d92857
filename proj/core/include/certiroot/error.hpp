#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace certiroot {

enum class ErrorCode {
  DivisionByZeroPolynomial,
  DegreeTooLow,
  DegreeMismatch,
  DegreeOverflow,
  DegreeUnresolved,
  EndpointIsRoot,
  IdenticalPolynomials,
  InvalidSchedule,
  InvalidSpec,
  LengthMismatch,
  NoSignChange,
  ParseError,
  PreconditionViolated,
  ScheduleOverflow,
  SeparationTooSmall,
  SourceExhausted,
  ThresholdNonPositive,
  TooLong,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends can emit a structured record without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace certiroot

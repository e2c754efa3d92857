#include "certiroot/error.hpp"

namespace certiroot {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DegreeUnresolved: return "DegreeUnresolved";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::IdenticalPolynomials: return "IdenticalPolynomials";
    case ErrorCode::InvalidSchedule: return "InvalidSchedule";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ScheduleOverflow: return "ScheduleOverflow";
    case ErrorCode::SeparationTooSmall: return "SeparationTooSmall";
    case ErrorCode::SourceExhausted: return "SourceExhausted";
    case ErrorCode::ThresholdNonPositive: return "ThresholdNonPositive";
    case ErrorCode::TooLong: return "TooLong";
  }
  return "Unknown";
}

}  // namespace certiroot

#include "pikiln/errors.hpp"

namespace pikiln {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeOperand: return "NegativeOperand";
    case ErrorCode::NonPositiveOperand: return "NonPositiveOperand";
    case ErrorCode::UnsupportedAngle: return "UnsupportedAngle";
    case ErrorCode::NegativeUnderSqrt: return "NegativeUnderSqrt";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::PoleAtInteger: return "PoleAtInteger";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NonAlternating: return "NonAlternating";
    case ErrorCode::DegenerateAlpha: return "DegenerateAlpha";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownId: return "UnknownId";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what)
    , code_(code)
{
}

bool Error::is_numeric() const noexcept
{
    switch (code_) {
    case ErrorCode::SingularPoint:
    case ErrorCode::PoleAtInteger:
    case ErrorCode::CoincidentPoints:
    case ErrorCode::NegativeUnderSqrt:
    case ErrorCode::DivisionByZero:
    case ErrorCode::NegativeOperand:
    case ErrorCode::NonPositiveOperand:
    case ErrorCode::NonAlternating:
        return true;
    default:
        return false;
    }
}

} // namespace pikiln

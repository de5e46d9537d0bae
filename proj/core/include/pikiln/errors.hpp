#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pikiln {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    ScaleMismatch,
    DivisionByZero,
    NegativeOperand,
    NonPositiveOperand,
    UnsupportedAngle,
    NegativeUnderSqrt,
    SingularPoint,
    PoleAtInteger,
    CoincidentPoints,
    NonAlternating,
    DegenerateAlpha,
    OutOfRange,
    UnknownId,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

    /// Pole and singular-point failures are "numeric" in the CLI's sense.
    bool is_numeric() const noexcept;

private:
    ErrorCode code_;
};

} // namespace pikiln

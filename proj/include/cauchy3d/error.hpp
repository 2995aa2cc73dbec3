#pragma once

#include <stdexcept>
#include <string>

namespace cauchy3d {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (input/validation -> 2, not solvable -> 3, singular -> 4).
enum class ErrorCode {
    RaggedShape,
    OrderZero,
    ZeroTopLayer,
    NegativeCoordinate,
    OutOfRange,
    IncompatibleExtents,
    MissingData,
    DimensionMismatch,
    NonFiniteValue,
    Singular,
    NotSolvable,
    CapExceeded,
    ParseError,
    ShapeMismatch,
    LCellMissing,
    ExtentViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cauchy3d

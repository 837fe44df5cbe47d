#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace susyces {

enum class ErrorCode {
    DomainError,
    InvalidParams,
    NonConvergence,
    SeriesRangeExceeded,
    PoleAtNonPositiveInteger,
    ArgumentTooSmall,
    StepSizeUnderflow,
    MaxStepsExceeded,
    GridTooCoarse,
    TooCloseToTurningRegion,
    DegenerateSample,
    NotConverged,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. The code identifies the
/// failure class; the message carries the offending values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace susyces

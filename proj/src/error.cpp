#include "susyces/error.hpp"

namespace susyces {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SeriesRangeExceeded: return "SeriesRangeExceeded";
    case ErrorCode::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorCode::ArgumentTooSmall: return "ArgumentTooSmall";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::TooCloseToTurningRegion: return "TooCloseToTurningRegion";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::NotConverged: return "NotConverged";
    }
    return "UnknownError";
}

}  // namespace susyces

// SPDX-License-Identifier: Apache-2.0
#include "lifelines/error.hpp"

namespace lifelines {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::NotLeftToRight: return "NotLeftToRight";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::OutOfCanvas: return "OutOfCanvas";
        case ErrorCode::BadSampleCount: return "BadSampleCount";
        case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
        case ErrorCode::PointOnCurve: return "PointOnCurve";
        case ErrorCode::EmptyCurve: return "EmptyCurve";
        case ErrorCode::StorageFailure: return "StorageFailure";
        case ErrorCode::BindFailure: return "BindFailure";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::BadRequest: return "BadRequest";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TooFewPoints:
        case ErrorCode::NotLeftToRight:
        case ErrorCode::NonFinite:
        case ErrorCode::OutOfCanvas:
        case ErrorCode::BadSampleCount:
        case ErrorCode::DegenerateOverlap:
        case ErrorCode::PointOnCurve:
        case ErrorCode::EmptyCurve:
        case ErrorCode::BadRequest:
            return true;
        default:
            return false;
    }
}

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lifelines {

enum class ErrorCode {
    TooFewPoints,
    NotLeftToRight,
    NonFinite,
    OutOfCanvas,
    BadSampleCount,
    DegenerateOverlap,
    PointOnCurve,
    EmptyCurve,
    StorageFailure,
    BindFailure,
    NotFound,
    BadRequest,
};

/// Stable wire name of an error code; used verbatim in service responses.
std::string_view error_name(ErrorCode code) noexcept;

/// True for codes caused by invalid caller input (CLI exit code 2).
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace lifelines

/**
 * @file error.hpp
 * @brief Error codes and the exception type thrown by every steinerhat module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steinerhat {

enum class ErrorCode {
    InvalidArgument,
    CollinearPoints,
    DegenerateInput,
    InsufficientSamples,
    DegenerateDirection,
    WVanishes,
    ParallelLines,
    Degenerate,
    DegenerateTriangle,
    UnsupportedCenter,
    NotPerspective,
    ParallelCevians,
    NotOrthologic,
    SidesParallel,
    EquilateralDegenerate,
    ConcentricCircles,
    DegeneratePole,
    NoCrossings,
};

std::string_view to_string(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace steinerhat

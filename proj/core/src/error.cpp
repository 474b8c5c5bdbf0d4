#include <steinerhat/error.hpp>

namespace steinerhat {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CollinearPoints: return "CollinearPoints";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::DegenerateDirection: return "DegenerateDirection";
        case ErrorCode::WVanishes: return "WVanishes";
        case ErrorCode::ParallelLines: return "ParallelLines";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorCode::UnsupportedCenter: return "UnsupportedCenter";
        case ErrorCode::NotPerspective: return "NotPerspective";
        case ErrorCode::ParallelCevians: return "ParallelCevians";
        case ErrorCode::NotOrthologic: return "NotOrthologic";
        case ErrorCode::SidesParallel: return "SidesParallel";
        case ErrorCode::EquilateralDegenerate: return "EquilateralDegenerate";
        case ErrorCode::ConcentricCircles: return "ConcentricCircles";
        case ErrorCode::DegeneratePole: return "DegeneratePole";
        case ErrorCode::NoCrossings: return "NoCrossings";
    }
    return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace steinerhat

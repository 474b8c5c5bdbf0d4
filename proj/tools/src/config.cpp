#include <steinerhat_app/config.hpp>

#include <algorithm>
#include <cmath>

namespace steinerhat::app {

Format parse_format(std::string_view s) {
    if (s == "svg") return Format::Svg;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + std::string(s) + "' (expected svg, csv or json)");
}

std::string_view to_string(Format f) noexcept {
    switch (f) {
        case Format::Svg: return "svg";
        case Format::Csv: return "csv";
        case Format::Json: return "json";
    }
    return "json";
}

void RunConfig::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || a < b) {
        throw UsageError("semi-axes must satisfy a >= b > 0");
    }
    if (u && !std::isfinite(*u)) throw UsageError("--u must be finite");
    if (theta && !std::isfinite(*theta)) throw UsageError("--theta must be finite");
    if (samples < 64) throw UsageError("--samples must be at least 64");
    if (sweep_count < 1) throw UsageError("--sweep must be at least 1");
    if (!(tolerance.abs_eps > 0.0) || !(tolerance.rel_eps > 0.0) || !std::isfinite(tolerance.abs_eps) ||
        !std::isfinite(tolerance.rel_eps)) {
        throw UsageError("tolerances must be positive and finite");
    }
}

double RunConfig::threshold_scale() const noexcept {
    const Tolerance defaults{};
    return std::min({1.0, tolerance.abs_eps / defaults.abs_eps, tolerance.rel_eps / defaults.rel_eps});
}

}  // namespace steinerhat::app

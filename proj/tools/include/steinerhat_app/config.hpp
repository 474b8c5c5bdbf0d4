#pragma once

#include <steinerhat/geometry.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steinerhat::app {

enum class Format { Svg, Csv, Json };

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] Format parse_format(std::string_view s);
[[nodiscard]] std::string_view to_string(Format f) noexcept;

struct RunConfig {
    double a{2.0};
    double b{1.0};
    std::optional<double> u;
    std::optional<double> theta;
    std::size_t samples{100000};
    std::size_t sweep_count{256};
    Tolerance tolerance{};
    std::string output_path;  ///< empty: standard output
    Format format{Format::Json};
    std::string figure{"main"};
    std::uint64_t seed{20240917};

    /// a >= b > 0, samples >= 64, sweep_count >= 1, positive tolerances. Throws UsageError.
    void validate() const;

    [[nodiscard]] Ellipse ellipse() const { return {a, b}; }
    [[nodiscard]] double u_or(double fallback) const noexcept { return u.value_or(fallback); }
    /// Factor (<= 1) applied to every check threshold: tolerances tighter than
    /// the library defaults tighten the checks, looser ones leave them alone.
    [[nodiscard]] double threshold_scale() const noexcept;
};

}  // namespace steinerhat::app

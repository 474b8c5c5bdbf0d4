#pragma once

#include <steinerhat_app/config.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace steinerhat::app {

/// One quantity compared against its bound: passes when value <= tolerance.
struct Measure {
    std::string label;
    double value{0.0};
    double tolerance{0.0};

    [[nodiscard]] bool pass() const noexcept { return value <= tolerance; }
};

struct CheckResult {
    int id{0};
    std::string name;
    std::string anchor;  ///< stable key naming the claim being checked
    std::vector<Measure> measures;
    std::string detail;  ///< error text when the check could not run

    [[nodiscard]] bool pass() const noexcept;
    /// The measure closest to (or furthest past) its bound.
    [[nodiscard]] const Measure* worst() const noexcept;
};

struct VerificationReport {
    std::uint64_t seed{0};
    std::vector<CheckResult> checks;

    [[nodiscard]] std::size_t passed() const noexcept;
    [[nodiscard]] bool all_passed() const noexcept { return passed() == checks.size(); }
};

/// The fourteen acceptance checks on the configured ellipse (a=2, b=1 by default).
[[nodiscard]] VerificationReport run_verification(const RunConfig& cfg);

/// "PASS [ 1] hat-area-invariance  max=... tol=..." per check.
[[nodiscard]] std::string summary_line(const CheckResult& c);

[[nodiscard]] nlohmann::json to_json(const VerificationReport& r, const RunConfig& cfg);
[[nodiscard]] std::string to_csv(const VerificationReport& r);

}  // namespace steinerhat::app

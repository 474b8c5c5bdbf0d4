#pragma once

#include <steinerhat_app/config.hpp>

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace steinerhat::app {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Parses `args` (without the program name) and runs one subcommand:
/// compute, verify, render, sweep or table. Output goes to --out when given,
/// otherwise to `out`; diagnostics and the verify summary go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Building blocks, exposed for tests.
[[nodiscard]] nlohmann::json compute_json(const RunConfig& cfg);
[[nodiscard]] std::string compute_csv(const RunConfig& cfg);
[[nodiscard]] std::string sweep_csv(const RunConfig& cfg, bool over_theta);
[[nodiscard]] nlohmann::json area_ratio_table_json(const RunConfig& cfg);
[[nodiscard]] std::string area_ratio_table_csv(const RunConfig& cfg);
[[nodiscard]] nlohmann::json coincidence_table_json(const RunConfig& cfg);
[[nodiscard]] std::string coincidence_table_csv(const RunConfig& cfg);

}  // namespace steinerhat::app

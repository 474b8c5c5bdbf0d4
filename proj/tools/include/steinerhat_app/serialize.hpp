#pragma once

#include <steinerhat/geometry.hpp>
#include <steinerhat_app/config.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace steinerhat::app {

/// Serializes with every floating-point number printed as %.17g, keys in sorted order.
[[nodiscard]] std::string dump_json(const nlohmann::json& j, int indent = 2);

[[nodiscard]] nlohmann::json point_json(Point2 p);
[[nodiscard]] nlohmann::json config_json(const RunConfig& cfg);

/// %.17g
[[nodiscard]] std::string format_real(double v);

/// Comma-separated table with a header row and '\n' line ends.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    [[nodiscard]] std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace steinerhat::app

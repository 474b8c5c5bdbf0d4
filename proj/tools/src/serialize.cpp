#include <steinerhat_app/serialize.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace steinerhat::app {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump(const nlohmann::json& j, int indent, int depth, std::string& out) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += nlohmann::json(key).dump();
                out += indent < 0 ? ":" : ": ";
                dump(value, indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ',';
                newline(depth + 1);
                dump(j[i], indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? format_real(v) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
    std::string out;
    dump(j, indent, 0, out);
    out += '\n';
    return out;
}

nlohmann::json point_json(Point2 p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j{{"a", cfg.a},
                     {"b", cfg.b},
                     {"samples", cfg.samples},
                     {"sweep", cfg.sweep_count},
                     {"tol_abs", cfg.tolerance.abs_eps},
                     {"tol_rel", cfg.tolerance.rel_eps},
                     {"seed", cfg.seed}};
    j["u"] = cfg.u ? nlohmann::json(*cfg.u) : nlohmann::json(nullptr);
    j["theta"] = cfg.theta ? nlohmann::json(*cfg.theta) : nlohmann::json(nullptr);
    return j;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw std::logic_error("CSV row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::string out;
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out;
}

}  // namespace steinerhat::app

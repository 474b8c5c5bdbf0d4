#include <steinerhat/envelope.hpp>
#include <steinerhat/error.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/tangency.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat_app/commands.hpp>
#include <steinerhat_app/parallel.hpp>
#include <steinerhat_app/report.hpp>
#include <steinerhat_app/serialize.hpp>
#include <steinerhat_app/svg.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace steinerhat::app {

namespace {

nlohmann::json points_json(std::span<const Point2> pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back(point_json(p));
    return arr;
}

nlohmann::json triangle_json(const Triangle& t) {
    const std::array<Point2, 3> v{t[0], t[1], t[2]};
    return {{"vertices", points_json(v)}, {"area", triangle_area(t)}};
}

nlohmann::json circle_json(const Circle& c) { return {{"center", point_json(c.center)}, {"radius", c.radius}}; }

nlohmann::json axes_json(const ConicImplicit& q) {
    const auto ax = q.semi_axes();
    if (!ax) return nullptr;
    return {{"major", ax->major}, {"minor", ax->minor}, {"major_direction", point_json(ax->major_direction)}};
}

nlohmann::json rotated_json(const Ellipse& e, BoundaryParam u, double theta, const HatFrame& f) {
    const double factor = std::cos(theta) * std::cos(theta);
    nlohmann::json j{{"theta", theta}, {"area_factor", factor}, {"center", point_json(rotated_center(e, u, theta))}};
    if (f.degenerate) {
        j["area"] = 0.0;
        return j;
    }
    j["area"] = rotated_hat_area(e, theta);
    j["cusps"] = points_json(rotated_cusps(e, u, theta));
    return j;
}

nlohmann::json tangency_json(const Ellipse& e, BoundaryParam u) {
    try {
        const TangencyReport rep = hat_ellipse_intersections(e, u);
        return {{"regime", to_string(rep.regime)},
                {"q_real_roots", rep.q_real_root_count},
                {"merged_contact", rep.merged_contact},
                {"tangency_points", points_json(rep.tangency_points)},
                {"transversal_points", points_json(rep.transversal_points)}};
    } catch (const GeometryError& ex) {
        return {{"error", ex.what()}};
    }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw GeometryError(ErrorCode::InvalidArgument, "cannot open " + cfg.output_path + " for writing");
    file << text;
    if (!file) throw GeometryError(ErrorCode::InvalidArgument, "failed writing " + cfg.output_path);
}

}  // namespace

nlohmann::json compute_json(const RunConfig& cfg) {
    cfg.validate();
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.0));
    const HatFrame f = build_hat_frame(e, u);
    nlohmann::json j{{"schema", 1},
                     {"kind", "compute"},
                     {"config", config_json(cfg)},
                     {"ellipse", {{"a", e.a()}, {"b", e.b()}, {"c2", e.c2()}, {"area", e.area()}}},
                     {"u", u.value},
                     {"M", point_json(f.m)},
                     {"degenerate", f.degenerate},
                     {"C2", point_json(f.c2)}};
    if (f.degenerate) {
        j["hat"] = {{"collapsed_point", point_json(f.c2)}, {"area", 0.0}};
    } else {
        j["hat"] = {{"area", hat_area(e)},
                    {"area_numeric", hat_area_numeric(e, u, cfg.samples)},
                    {"area_ratio", hat_area(e) / e.area()},
                    {"cusp_params", f.t_cusp},
                    {"cusps", points_json(f.cusps)},
                    {"preimages", points_json(f.preimages)},
                    {"osculating_centers", points_json(f.osc_centers)}};
        j["triangles"] = {{"T", triangle_json(preimage_triangle(f))},
                          {"T'", triangle_json(cusp_triangle(f))},
                          {"T''", triangle_json(osculating_triangle(f))}};
        nlohmann::json osc = nlohmann::json::array();
        for (int i = 1; i <= 3; ++i) osc.push_back(circle_json(osculating_circle(e, u, i)));
        j["circles"] = {{"K", circle_json(circle_K(e, u))}, {"osculating", osc}, {"K'", circle_json(circumcircle_Kp(e, u))}};
        j["cusp_steiner_ellipse"] = {{"semi_axes", axes_json(cusp_steiner_ellipse_conic(e, u))},
                                     {"steiner_point", point_json(cusp_steiner_point(e, u))}};
        j["loci"] = {{"c2_crossings", points_json(c2_crossings(e))}, {"cusp_crossings", points_json(cusp_crossings(e))}};
        j["tangency"] = tangency_json(e, u);
    }
    if (cfg.theta) j["rotated"] = rotated_json(e, u, *cfg.theta, f);
    return j;
}

std::string compute_csv(const RunConfig& cfg) {
    cfg.validate();
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.0));
    std::vector<std::string> header{"t", "ellipse_x", "ellipse_y", "hat_x", "hat_y"};
    if (cfg.theta) {
        header.emplace_back("rotated_x");
        header.emplace_back("rotated_y");
    }
    CsvTable table(header);
    constexpr std::size_t n = 720;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / n;
        const Point2 p = ellipse_point(e, t), d = deltoid_point(e, u, t);
        std::vector<std::string> row{format_real(t), format_real(p.x), format_real(p.y), format_real(d.x), format_real(d.y)};
        if (cfg.theta) {
            const Point2 r = rotated_npc_point(e, u, *cfg.theta, t);
            row.push_back(format_real(r.x));
            row.push_back(format_real(r.y));
        }
        table.add_row(std::move(row));
    }
    return table.str();
}

std::string sweep_csv(const RunConfig& cfg, bool over_theta) {
    cfg.validate();
    if (cfg.sweep_count < 2) throw UsageError("sweep needs --sweep >= 2");
    const Ellipse e = cfg.ellipse();
    const std::size_t n = cfg.sweep_count;
    if (over_theta) {
        const BoundaryParam u(cfg.u_or(0.8));
        CsvTable table({"k", "theta", "area_numeric", "area_closed", "cos2_theta", "area_ratio"});
        const double base = hat_area(e);
        const auto rows = parallel_map(n, [&](std::size_t k) {
            // Half-open sweep over [0, π/2): θ = π/2 collapses the curve.
            const double theta = 0.5 * kPi * static_cast<double>(k) / static_cast<double>(n);
            const double c = std::cos(theta);
            const double area = rotated_hat_area_numeric(e, u, theta, cfg.samples);
            return std::vector<std::string>{std::to_string(k), format_real(theta), format_real(area),
                                            format_real(rotated_hat_area(e, theta)), format_real(c * c),
                                            format_real(base > 0.0 ? area / base : 0.0)};
        });
        for (auto r : rows) table.add_row(std::move(r));
        return table.str();
    }
    CsvTable table({"k", "u", "hat_area_numeric", "area_T", "area_T1", "area_T2", "concyclic_residual", "c2_ellipse_value",
                    "c2_crossing", "regime"});
    struct Row {
        double u, area, t, t1, t2, residual, c2_value;
        std::string regime;
    };
    const auto rows = parallel_map(n, [&](std::size_t k) {
        const BoundaryParam u(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
        const HatFrame f = build_hat_frame(e, u);
        Row r{u.value, 0.0, 0.0, 0.0, 0.0, 0.0, e.implicit_value(f.c2), "degenerate"};
        if (f.degenerate) return r;
        r.area = hat_area_numeric(e, u, cfg.samples);
        r.t = triangle_area(preimage_triangle(f));
        r.t1 = triangle_area(cusp_triangle(f));
        r.t2 = triangle_area(osculating_triangle(f));
        const ConicImplicit k_conic = circle_K_conic(e, u);
        for (const Point2 p : {f.m, f.c2, f.preimages[0], f.preimages[1], f.preimages[2]}) {
            r.residual = std::max(r.residual, std::abs(k_conic(p)));
        }
        try {
            r.regime = to_string(hat_ellipse_intersections(e, u).regime);
        } catch (const GeometryError&) {
            r.regime = "unresolved";
        }
        return r;
    });
    for (std::size_t k = 0; k < n; ++k) {
        const Row& r = rows[k];
        // Flag a sign change of E(C2) between this sample and the next (cyclically).
        const double next = rows[(k + 1) % n].c2_value;
        const bool crossing = (r.c2_value < 0.0) != (next < 0.0);
        table.add_row({std::to_string(k), format_real(r.u), format_real(r.area), format_real(r.t), format_real(r.t1),
                       format_real(r.t2), format_real(r.residual), format_real(r.c2_value), crossing ? "1" : "0", r.regime});
    }
    return table.str();
}

namespace {

struct RatioRow {
    std::string label;
    double aspect;
    double expected;
};

std::vector<RatioRow> ratio_rows() {
    return {{"sqrt(2+sqrt(3))", std::sqrt(2.0 + std::sqrt(3.0)), 1.0},
            {"golden ratio", (1.0 + std::sqrt(5.0)) / 2.0, 0.5},
            {"sqrt(2)", std::sqrt(2.0), 0.25},
            {"1", 1.0, 0.0}};
}

}  // namespace

nlohmann::json area_ratio_table_json(const RunConfig& cfg) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : ratio_rows()) {
        const Ellipse e(r.aspect, 1.0);
        rows.push_back({{"aspect", r.aspect},
                        {"label", r.label},
                        {"expected", r.expected},
                        {"closed", hat_area(e) / e.area()},
                        {"numeric", hat_area_numeric(e, BoundaryParam(cfg.u_or(0.3)), cfg.samples) / e.area()}});
    }
    return {{"schema", 1}, {"kind", "area-ratio-table"}, {"rows", rows}};
}

std::string area_ratio_table_csv(const RunConfig& cfg) {
    CsvTable t({"aspect", "label", "expected", "closed", "numeric"});
    for (const auto& row : area_ratio_table_json(cfg)["rows"]) {
        t.add_row({format_real(row["aspect"].get<double>()), row["label"].get<std::string>(),
                   format_real(row["expected"].get<double>()), format_real(row["closed"].get<double>()),
                   format_real(row["numeric"].get<double>())});
    }
    return t.str();
}

nlohmann::json coincidence_table_json(const RunConfig& cfg) {
    cfg.validate();
    const auto rows = coincidence_table_check(cfg.ellipse(), BoundaryParam(cfg.u_or(0.8)), cfg.tolerance);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"base", "X" + std::to_string(r.k_base)},
                       {"companion", std::string("X") + std::to_string(r.k_companion) + r.companion},
                       {"base_point", point_json(r.base)},
                       {"companion_point", point_json(r.other)},
                       {"distance", r.distance}});
    }
    return {{"schema", 1}, {"kind", "center-coincidences"}, {"u", cfg.u_or(0.8)}, {"rows", arr}};
}

std::string coincidence_table_csv(const RunConfig& cfg) {
    CsvTable t({"base", "companion", "distance"});
    for (const auto& row : coincidence_table_json(cfg)["rows"]) {
        t.add_row({row["base"].get<std::string>(), row["companion"].get<std::string>(),
                   format_real(row["distance"].get<double>())});
    }
    return t.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Negative pedal curve of an ellipse: compute, verify and render", "steinerhat"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    double u = 0.0, theta = 0.0;
    std::string format = "json";
    app.add_option("--a", cfg.a, "major semi-axis")->capture_default_str();
    app.add_option("--b", cfg.b, "minor semi-axis")->capture_default_str();
    auto* u_opt = app.add_option("--u", u, "pole parameter M = P(u)");
    auto* theta_opt = app.add_option("--theta", theta, "rotation of the lines about their feet");
    app.add_option("--samples", cfg.samples, "curve samples for numeric areas")->capture_default_str();
    app.add_option("--sweep", cfg.sweep_count, "number of u (or theta) values in sweeps")->capture_default_str();
    app.add_option("--tol-abs", cfg.tolerance.abs_eps, "absolute tolerance")->capture_default_str();
    app.add_option("--tol-rel", cfg.tolerance.rel_eps, "relative tolerance")->capture_default_str();
    app.add_option("--out", cfg.output_path, "output file (render --figure all: directory)");
    auto* format_opt = app.add_option("--format", format, "svg, csv or json")->capture_default_str();
    app.add_option("--figure", cfg.figure, "figure name or 'all'")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();

    auto* compute = app.add_subcommand("compute", "hat frame, triangles, circles and contacts at one pole");
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    bool table1 = false;
    verify->add_flag("--table1", table1, "only reproduce the special area-ratio table");
    auto* render = app.add_subcommand("render", "write an SVG figure");
    auto* sweep = app.add_subcommand("sweep", "per-sample scalars over u (or theta) as CSV");
    std::string over = "u";
    sweep->add_option("--over", over, "u or theta")->check(CLI::IsMember({"u", "theta"}))->capture_default_str();
    auto* table = app.add_subcommand("table", "area-ratio or center-coincidence table");
    std::string which = "area";
    table->add_option("--which", which, "area or centers")->check(CLI::IsMember({"area", "centers"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    try {
        if (u_opt->count() > 0) cfg.u = u;
        if (theta_opt->count() > 0) cfg.theta = theta;
        cfg.format = parse_format(format);
        const bool format_given = format_opt->count() > 0;
        cfg.validate();

        if (*compute) {
            if (cfg.format == Format::Svg) throw UsageError("compute writes json or csv");
            emit(cfg, cfg.format == Format::Csv ? compute_csv(cfg) : dump_json(compute_json(cfg)), out);
            return kExitOk;
        }
        if (*verify) {
            if (cfg.format == Format::Svg) throw UsageError("verify writes json or csv");
            if (table1) {
                emit(cfg, cfg.format == Format::Csv ? area_ratio_table_csv(cfg) : dump_json(area_ratio_table_json(cfg)), out);
                bool ok = true;
                for (const auto& row : area_ratio_table_json(cfg)["rows"]) {
                    const double expected = row["expected"].get<double>();
                    ok = ok && std::abs(row["closed"].get<double>() - expected) <= 1e-12 * cfg.threshold_scale() &&
                         std::abs(row["numeric"].get<double>() - expected) <= 1e-6 * cfg.threshold_scale();
                }
                return ok ? kExitOk : kExitFailure;
            }
            const VerificationReport report = run_verification(cfg);
            for (const auto& c : report.checks) err << summary_line(c) << "\n";
            err << report.passed() << "/" << report.checks.size() << " checks passed\n";
            emit(cfg, cfg.format == Format::Csv ? to_csv(report) : dump_json(to_json(report, cfg)), out);
            return report.all_passed() ? kExitOk : kExitFailure;
        }
        if (*render) {
            if (format_given && cfg.format != Format::Svg) throw UsageError("render writes svg");
            if (cfg.figure == "all") {
                if (cfg.output_path.empty()) throw UsageError("--figure all needs --out DIR");
                std::filesystem::create_directories(cfg.output_path);
                for (const auto name : figure_names()) {
                    RunConfig one = cfg;
                    one.output_path = (std::filesystem::path(cfg.output_path) / (std::string(name) + ".svg")).string();
                    emit(one, render_figure(name, cfg), out);
                }
                return kExitOk;
            }
            emit(cfg, render_figure(cfg.figure, cfg), out);
            return kExitOk;
        }
        if (*sweep) {
            if (format_given && cfg.format != Format::Csv) throw UsageError("sweep writes csv");
            emit(cfg, sweep_csv(cfg, over == "theta"), out);
            return kExitOk;
        }
        if (*table) {
            if (cfg.format == Format::Svg) throw UsageError("table writes json or csv");
            const bool csv = cfg.format == Format::Csv;
            if (which == "area") {
                emit(cfg, csv ? area_ratio_table_csv(cfg) : dump_json(area_ratio_table_json(cfg)), out);
            } else {
                emit(cfg, csv ? coincidence_table_csv(cfg) : dump_json(coincidence_table_json(cfg)), out);
            }
            return kExitOk;
        }
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace steinerhat::app

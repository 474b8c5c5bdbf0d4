#include <steinerhat_app/commands.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using steinerhat::app::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

TEST(Compute, HatCenterAtTheVertex) {
    const CliRun r = cli({"compute", "--a", "2", "--b", "1", "--u", "0", "--samples", "2000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["C2"][0].get<double>(), -1.25, 1e-15);
    EXPECT_NEAR(j["C2"][1].get<double>(), 0.0, 1e-15);
    EXPECT_FALSE(j["degenerate"].get<bool>());
    EXPECT_NEAR(j["hat"]["area_ratio"].get<double>(), j["hat"]["area"].get<double>() / (2.0 * std::acos(-1.0)), 1e-12);
}

TEST(Compute, CircleIsFlaggedDegenerate) {
    const CliRun r = cli({"compute", "--a", "1", "--b", "1", "--u", "0.4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["degenerate"].get<bool>());
    EXPECT_EQ(j["hat"]["area"].get<double>(), 0.0);
}

TEST(Compute, RotatedBlock) {
    const CliRun r = cli({"compute", "--u", "0.3", "--theta", "0.5", "--samples", "2000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["rotated"]["area_factor"].get<double>(), std::pow(std::cos(0.5), 2), 1e-15);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
    const std::vector<std::vector<std::string>> runs{
        {"compute", "--u", "1.1", "--samples", "4000"},
        {"compute", "--u", "1.1", "--format", "csv"},
        {"render", "--figure", "osculating", "--u", "0.9"},
        {"sweep", "--sweep", "16", "--samples", "2000"},
        {"table", "--which", "centers"},
    };
    for (const auto& args : runs) {
        const CliRun a = cli(args), b = cli(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out) << args.front();
    }
}

TEST(ExitCodes, UsageErrors) {
    EXPECT_EQ(cli({"compute", "--bogus"}).code, 2);
    EXPECT_EQ(cli({"compute", "--a", "1", "--b", "2"}).code, 2);
    EXPECT_EQ(cli({"compute", "--b", "-1"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"render", "--figure", "nope"}).code, 2);
    EXPECT_EQ(cli({"render", "--figure", "all"}).code, 2);
    EXPECT_EQ(cli({"sweep", "--over", "v"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Verify, PassesThenFailsUnderImpossibleTolerance) {
    const CliRun ok = cli({"verify"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(count_of(ok.err, "PASS ["), 14u);
    const auto j = nlohmann::json::parse(ok.out);
    EXPECT_EQ(j["summary"]["passed"].get<int>(), 14);

    const CliRun bad = cli({"verify", "--tol-abs", "1e-20", "--tol-rel", "1e-20"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_GT(count_of(bad.err, "FAIL ["), 0u);
    EXPECT_TRUE(nlohmann::json::accept(bad.out));
}

TEST(Verify, AreaRatioTable) {
    const CliRun r = cli({"verify", "--table1", "--samples", "100000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 4u);
    for (const auto& row : j["rows"]) {
        EXPECT_NEAR(row["closed"].get<double>(), row["expected"].get<double>(), 1e-12);
        EXPECT_NEAR(row["numeric"].get<double>(), row["expected"].get<double>(), 1e-6);
    }
}

TEST(Render, FiguresAreStandaloneSvg) {
    for (const char* name : {"main", "preimg_tri", "osculating", "cusp-loci", "deltoid-tangs", "npc-rot"}) {
        const CliRun r = cli({"render", "--figure", name});
        ASSERT_EQ(r.code, 0) << name << ": " << r.err;
        EXPECT_EQ(r.out.rfind("<?xml", 0), 0u) << name;
        EXPECT_NE(r.out.find("viewBox=\""), std::string::npos) << name;
        EXPECT_EQ(r.out.find("transform"), std::string::npos) << name;
        EXPECT_NE(r.out.find("</svg>"), std::string::npos) << name;
    }
    EXPECT_NE(cli({"render", "--figure", "cusp-loci", "--a", "1.4142135623730951"}).out.find("self-intersections of the cusp locus: 3"),
              std::string::npos);
    EXPECT_NE(cli({"render", "--figure", "preimg_tri"}).out.find("= 4"), std::string::npos);
}

TEST(Render, AllFiguresToDirectory) {
    const auto dir = std::filesystem::temp_directory_path() / "steinerhat_cli_test_figs";
    std::filesystem::remove_all(dir);
    const CliRun r = cli({"render", "--figure", "all", "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::size_t n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) n += entry.path().extension() == ".svg";
    EXPECT_EQ(n, 6u);
    std::filesystem::remove_all(dir);
}

TEST(Sweep, CrossingsAndRotationFactor) {
    const CliRun r = cli({"sweep", "--sweep", "64", "--samples", "2000"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int crossings = 0, rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // c2_crossing is the next-to-last column.
        const auto last = line.rfind(',');
        const auto prev = line.rfind(',', last - 1);
        crossings += line.substr(prev + 1, last - prev - 1) == "1";
    }
    EXPECT_EQ(rows, 64);
    EXPECT_EQ(crossings, 4);

    const CliRun t = cli({"sweep", "--over", "theta", "--sweep", "8", "--samples", "20000"});
    ASSERT_EQ(t.code, 0) << t.err;
    std::istringstream tl(t.out);
    std::getline(tl, line);
    while (std::getline(tl, line)) {
        std::vector<double> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(std::stod(c));
        ASSERT_EQ(cells.size(), 6u);
        EXPECT_NEAR(cells[5], cells[4], 1e-6) << line;
    }
}

}  // namespace

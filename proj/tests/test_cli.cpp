#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <qextract/cli.hpp>

using namespace qextract;
namespace fs = std::filesystem;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qextract");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header)
        *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

fs::path scratch_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("qextract_test_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST(CliEta, LosslessAsymptoteIsOne)
{
    const auto r = invoke({"eta", "--gamma-rad", "1e6", "--gamma-abs", "0", "--elapsed", "1e-4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["asymptote"].get<double>(), 1.0);
    EXPECT_NEAR(doc["rows"].back()["eta_closed"].get<double>(), 1.0, 1e-15);
}

TEST(CliEta, RateRatioAsymptote)
{
    const auto r = invoke({"eta", "--gamma-rad", "1", "--gamma-abs", "0.05", "--elapsed", "100", "--samples", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    EXPECT_EQ(header, "t,eta_closed");
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0][1], 0.0);
    EXPECT_NEAR(rows.back()[1], 1.0 / 1.05, 1e-14);
}

TEST(CliEta, NumericColumn)
{
    const auto r = invoke({"eta", "--length", "0.01", "--transmission", "0.01", "--absorption", "0.002", "--elapsed",
                           "2e-6", "--samples", "4", "--numeric"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    EXPECT_EQ(header, "t,eta_closed,eta_numeric");
    for (const auto& row : rows)
        EXPECT_NEAR(row[2], row[1], 1e-6 * std::max(row[1], 1e-300));
}

TEST(CliEta, ConfigurationErrors)
{
    EXPECT_EQ(invoke({"eta", "--eta", "0.5", "--elapsed", "1"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"eta", "--gamma-rad", "1", "--gamma-abs", "0"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"eta", "--gamma-rad", "1", "--gamma-abs", "0", "--elapsed", "1", "--numeric"}).code,
              cli::kInvalidConfig);
    EXPECT_EQ(invoke({"eta", "--gamma-rad", "-1", "--gamma-abs", "0", "--elapsed", "1"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"bogus"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"--version"}).code, 0);
}

TEST(CliWigner, CsvLayoutAndDeterminism)
{
    const std::vector<std::string> args{"wigner", "--state", "fock:1", "--eta", "0.71", "--grid", "-1:1:3,-2:2:5"};
    const auto a = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, invoke(args).out);
    std::string header;
    const auto rows = parse_csv(a.out, &header);
    EXPECT_EQ(header, "re,im,value");
    ASSERT_EQ(rows.size(), 15u);
    EXPECT_EQ(rows[0][0], -1.0);
    EXPECT_EQ(rows[0][1], -2.0);
    EXPECT_EQ(rows[1][0], 0.0);
    EXPECT_EQ(rows[1][1], -2.0);
    EXPECT_EQ(rows[3][1], -1.0);
    EXPECT_DOUBLE_EQ(rows[7][2], fock_output_wigner(1, 0.71)(0.0));
}

TEST(CliWigner, JsonMetadata)
{
    const auto r = invoke({"wigner", "--state", "cat:2", "--gamma-rad", "3", "--gamma-abs", "1", "--elapsed", "10",
                           "--grid", "-1:1:3,-1:1:3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["metadata"]["state"], "cat:2");
    EXPECT_EQ(doc["metadata"]["path"], "analytic");
    EXPECT_NEAR(doc["metadata"]["eta"].get<double>(), 0.75 * -std::expm1(-40.0), 1e-15);
    EXPECT_EQ(doc["values"].size(), 9u);
}

TEST(CliWigner, PathsAgree)
{
    const std::vector<std::string> base{"wigner", "--state", "cat:2", "--eta", "0.84", "--grid", "-3:3:13,-3:3:13"};
    auto with = [&](const char* flag) {
        auto a = base;
        if (*flag)
            a.push_back(flag);
        const auto r = invoke(a);
        EXPECT_EQ(r.code, 0) << r.err;
        return parse_csv(r.out);
    };
    const auto analytic = with("");
    const auto conv = with("--via-convolution");
    const auto orc = with("--via-oracle");
    for (std::size_t k = 0; k < analytic.size(); ++k) {
        EXPECT_NEAR(conv[k][2], analytic[k][2], 1e-8);
        EXPECT_NEAR(orc[k][2], analytic[k][2], 1e-8);
    }
}

TEST(CliWigner, ExitCodes)
{
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "squeezed:1", "--eta", "0.5"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "1.5"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.5", "--gamma-rad", "1", "--gamma-abs", "1"}).code,
              cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.5", "--grid", "1:0:3,0:1:3"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.5", "--s", "1"}).code, cli::kInvalidConfig);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.5", "--via-convolution", "--via-oracle"}).code,
              cli::kInvalidConfig);
    // s = 0.5 needs a cavity order above the Wigner function.
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.9", "--s", "0.5", "--grid", "-1:1:3,-1:1:3"}).code,
              cli::kValidity);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:1", "--eta", "0.9", "--s", "0.5", "--grid", "-1:1:3,-1:1:3",
                      "--via-convolution"})
                  .code,
              cli::kValidity);
}

TEST(CliWigner, HusimiOutput)
{
    const auto r = invoke({"wigner", "--state", "fock:0", "--eta", "0.6", "--s", "-1", "--grid", "-1:1:3,-1:1:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(parse_csv(r.out)[4][2], 1.0 / std::numbers::pi, 1e-14);
}

TEST(CliThresholds, Fock)
{
    auto r = invoke({"thresholds", "--state", "fock:1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["threshold"].get<double>(), 0.5);
    EXPECT_EQ(doc["required_rate_ratio"].get<double>(), 1.0);
    r = invoke({"thresholds", "--state", "fock:4", "--eta", "0.9"});
    doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["threshold"].get<double>(), 0.875);
    EXPECT_TRUE(doc["satisfied"].get<bool>());
    EXPECT_EQ(invoke({"thresholds", "--state", "fock:0"}).code, cli::kInvalidConfig);
}

TEST(CliThresholds, Cat)
{
    const auto r = invoke({"thresholds", "--state", "cat:3", "--eta", "0.952"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["margin"].get<double>(), 0.864, 1e-12);
    EXPECT_FALSE(doc["satisfied"].get<bool>());
    EXPECT_NEAR(doc["fringe_damping"].get<double>(), std::exp(-0.864), 1e-15);
}

TEST(CliFigures, ManifestAndGrids)
{
    const auto dir = scratch_dir("figs");
    const auto r = invoke({"reproduce-figures", "--out", dir.string(), "--grid", "-4:4:41,-4:4:41"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream mf(dir / "manifest.json");
    const auto manifest = nlohmann::json::parse(mf);
    ASSERT_EQ(manifest["figures"].size(), 6u);
    const double etas[] = {0.99, 0.71, 0.5, 0.998, 0.952, 0.84};
    for (std::size_t k = 0; k < 6; ++k) {
        const auto& e = manifest["figures"][k];
        EXPECT_EQ(e["eta"].get<double>(), etas[k]);
        std::ifstream f(dir / e["file"].get<std::string>());
        std::stringstream ss;
        ss << f.rdbuf();
        EXPECT_EQ(cli::sha256_hex(ss.str()), e["sha256"]);
    }
    std::ifstream fig1c(dir / "fig1c.csv");
    std::stringstream ss;
    ss << fig1c.rdbuf();
    const auto rows = parse_csv(ss.str());
    EXPECT_EQ(rows[20 * 41 + 20][0], 0.0);
    EXPECT_NEAR(rows[20 * 41 + 20][2], 0.0, 1e-12);
    fs::remove_all(dir);
}

TEST(CliFigures, UnwritableDirectory)
{
    const auto dir = scratch_dir("blocked");
    fs::create_directories(dir.parent_path());
    std::ofstream(dir.string()) << "file in the way";
    EXPECT_EQ(invoke({"reproduce-figures", "--out", (dir / "sub").string()}).code, cli::kFilesystem);
    EXPECT_EQ(invoke({"wigner", "--state", "fock:0", "--eta", "1", "--grid", "-1:1:3,-1:1:3", "--out",
                      (dir / "x.csv").string()})
                  .code,
              cli::kFilesystem);
    fs::remove_all(dir);
}

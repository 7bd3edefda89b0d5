// Copyright 2026 The repnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "repnet/io.hpp"
#include "support/fixtures.hpp"

namespace repnet {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "repnet");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "repnet-cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir.parent_path());
    return dir;
}

TEST(Cli, HelpDocumentsFlags) {
    const auto top = invoke({"--help"});
    EXPECT_EQ(top.code, 0);
    for (const char* cmd : {"simulate", "sweep", "analyze", "chain-bound", "export"})
        EXPECT_NE(top.out.find(cmd), std::string::npos) << cmd;
    const auto sweep = invoke({"sweep", "--help"});
    EXPECT_EQ(sweep.code, 0);
    for (const char* flag : {"--config", "--out", "--seed", "--tau", "--p", "--m", "--n", "--t-max", "--runs",
                             "--sample-every", "--json", "--workers"})
        EXPECT_NE(sweep.out.find(flag), std::string::npos) << flag;
}

TEST(Cli, NoSubcommandIsAnError) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
}

TEST(Cli, AnalyzeJson) {
    const auto r = invoke({"analyze", testing::fixture_path("cycles_2.txt").string(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j.at("lambda1").get<double>(), 1.22, 0.005);
    const std::vector<double> want{0.819, 0.671, 1, 0.55};
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(j.at("b")[i].get<double>(), want[i], 0.005);
    EXPECT_EQ(j.at("core"), json({0, 1, 2, 3}));
    EXPECT_EQ(j.at("cycles").at("count"), 2);
    EXPECT_EQ(j.at("cycles").at("by_length").at("4"), 1);
    EXPECT_TRUE(j.at("converged").get<bool>());
}

TEST(Cli, AnalyzeText) {
    const auto r = invoke({"analyze", testing::fixture_path("cycles_5.txt").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("lambda1 = 1.32"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("cycles: 3"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeZeroMatrix) {
    const auto dir = fresh_dir("zero");
    fs::create_directories(dir);
    write_file_atomic(dir / "zero.txt", "0 0 0\n0 0 0\n0 0 0\n");
    const auto r = invoke({"analyze", (dir / "zero.txt").string(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("lambda1").get<double>(), 0.0);
    EXPECT_EQ(j.at("sccs").size(), 3u);
    EXPECT_TRUE(j.at("core").empty());
}

TEST(Cli, AnalyzeRejectsBadMatrix) {
    const auto dir = fresh_dir("bad");
    fs::create_directories(dir);
    write_file_atomic(dir / "bad.txt", "0 1\n3 0\n");
    const auto r = invoke({"analyze", (dir / "bad.txt").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("(1, 0)"), std::string::npos) << r.err;
}

TEST(Cli, ChainBound) {
    const auto r = invoke({"chain-bound", "--b", "0.75", "--tau", "0.2", "--lambda1", "1.32"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "5\n");
    const auto j = invoke({"chain-bound", "--b", "0.75", "--tau", "0.2", "--lambda1", "1.32", "--json"});
    EXPECT_EQ(json::parse(j.out).at("n"), 5);
    EXPECT_EQ(invoke({"chain-bound", "--b", "0.75", "--tau", "0.2", "--lambda1", "1"}).code, 1);
}

TEST(Cli, MissingConfigWritesNothing) {
    const auto dir = fresh_dir("missing");
    const auto r = invoke({"sweep", "--config", "/nonexistent/c.yaml", "--out", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(dir));
}

TEST(Cli, InvalidConfigWritesNothing) {
    const auto dir = fresh_dir("invalid");
    const auto cfg = dir.string() + ".yaml";
    write_file_atomic(cfg, "n: 1\ntau_values: [2]\n");
    const auto r = invoke({"sweep", "--config", cfg, "--out", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("tau_values"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir));
    EXPECT_EQ(invoke({"simulate", "--p", "0.2", "--tau", "1.5", "--out", dir.string()}).code, 1);
    EXPECT_FALSE(fs::exists(dir));
}

TEST(Cli, DensityFlagsAreExclusive) {
    EXPECT_EQ(invoke({"simulate", "--p", "0.1", "--m", "1"}).code, 1);
}

TEST(Cli, UnwritableOutputIsRuntimeFailure) {
    const auto r = invoke({"simulate", "--p", "0.2", "--n", "10", "--t-max", "5", "--out", "/proc/repnet/trace.csv"});
    EXPECT_EQ(r.code, 2) << r.err;
}

TEST(Cli, SimulateWritesReplayableTrace) {
    const auto dir = fresh_dir("simulate");
    const auto r = invoke({"simulate", "--m", "1", "--n", "15", "--t-max", "40", "--tau", "0.1", "--seed", "5",
                           "--out", (dir / "t.csv").string(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("t_max"), 40);
    EXPECT_NEAR(j.at("p").get<double>(), 1.0 / 14, 1e-15);
    EXPECT_EQ(replay(dir / "t.csv").records.size(), 40u);
}

TEST(Cli, SweepIsReproducible) {
    const auto base = fresh_dir("sweep");
    fs::create_directories(base);
    const auto cfg = (base / "c.yaml").string();
    write_file_atomic(cfg,
                      "n: 15\ndensity_kind: links_per_user\ndensity: 1\ntau_values: [0, 0.2]\n"
                      "t_max: 100\nruns: 2\nseed: 3\nfilter_whole: false\n");
    const auto a = invoke({"sweep", "--config", cfg, "--out", (base / "a").string()});
    const auto b = invoke({"sweep", "--config", cfg, "--out", (base / "b").string(), "--workers", "2", "--json"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(json::parse(b.out).at("per_tau").size(), 2u);
    for (const char* f : {"summary.csv", "hist_core_size.csv", "hist_lambda1.csv", "segments.csv"})
        EXPECT_EQ(read_file(base / "a" / f), read_file(base / "b" / f)) << f;
}

TEST(Cli, ExportRoundTrip) {
    const auto dir = fresh_dir("export");
    fs::create_directories(dir);
    const auto src = testing::fixture_path("core_periphery_5.txt").string();
    ASSERT_EQ(invoke({"export", "--in", src, "--format", "json", "--out", (dir / "s.json").string()}).code, 0);
    const auto dot = invoke({"export", "--in", (dir / "s.json").string(), "--format", "dot"});
    ASSERT_EQ(dot.code, 0) << dot.err;
    EXPECT_NE(dot.out.find("core=true"), std::string::npos);
    EXPECT_EQ(invoke({"export", "--in", src, "--format", "svg"}).code, 1);
}

}  // namespace
}  // namespace repnet

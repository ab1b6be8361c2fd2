#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "alsearch");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = als::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST(Cli, GapMidpoint) {
    const Outcome o = run_cli({"gap", "--model", "baseline", "--n-exp", "6", "--samples", "1001"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto l = lines(o.out);
    ASSERT_EQ(l.size(), 1002u);
    EXPECT_EQ(l[0], "s,g2");
    EXPECT_EQ(l[501], "0.5,0.015625");
    EXPECT_TRUE(o.err.empty());
}

TEST(Cli, SluggishEmptyForTwoStates) {
    const Outcome o = run_cli({"sluggish", "--model", "baseline", "--n-exp", "1", "--epsilon", "1", "--threshold", "64"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto l = lines(o.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0], "model,n_exponent,epsilon,threshold,s_strt,s_stp,sluggish_time,window_found");
    EXPECT_EQ(l[1], "baseline,1,1,64,0,0,0,false");
}

TEST(Cli, SluggishManualWindow) {
    const Outcome o = run_cli({"sluggish", "--n-exp", "6", "--window", "0.4,0.6"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("baseline,6,1,64,0.4,0.6,8.13300503503"), std::string::npos) << o.out;
}

TEST(Cli, TimemapColumns) {
    const Outcome o = run_cli({"timemap", "--n-exp", "6", "--samples", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto l = lines(o.out);
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[0], "s,t,dt_ds,d2t_ds2,g2");
    EXPECT_EQ(l[1].rfind("0,0,1,3.9375,1", 0), 0u) << l[1];
    EXPECT_EQ(l[2].rfind("0.5,5.82758120747", 0), 0u) << l[2];
}

TEST(Cli, GridTrailer) {
    const Outcome o = run_cli({"grid", "--n-exp", "10"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto l = lines(o.out);
    ASSERT_EQ(l.size(), 13u);
    EXPECT_EQ(l[0], "a,b,sluggish_time");
    EXPECT_EQ(l[12].rfind("# best a=", 0), 0u);
}

TEST(Cli, EvolveReportsFidelity) {
    const Outcome o = run_cli({"evolve", "--n-exp", "4", "--epsilon", "0.1", "--steps", "4000", "--check-doubling"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto l = lines(o.out);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l[0],
              "model,n_exponent,epsilon,steps,total_time,fidelity_omega,max_norm_drift,fidelity_doubled,"
              "step_doubling_delta,converged");
    EXPECT_NE(l[1].find(",true"), std::string::npos);
}

TEST(Cli, AdaptiveModels) {
    for (const char* m : {"adaptive-sine", "adaptive-ss", "adaptive-grid"}) {
        const Outcome o = run_cli({"sluggish", "--model", m, "--n-exp", "8"});
        ASSERT_EQ(o.code, 0) << m << o.err;
        EXPECT_NE(o.out.find(std::string(m) + ",8,"), std::string::npos);
    }
    const Outcome explicit_grid = run_cli({"sluggish", "--model", "adaptive-grid", "--n-exp", "8", "--a", "0.6"});
    EXPECT_EQ(explicit_grid.code, 0) << explicit_grid.err;
    const Outcome bad_pair = run_cli({"sluggish", "--model", "adaptive-grid", "--n-exp", "8", "--a", "0.6", "--b", "0.6"});
    EXPECT_EQ(bad_pair.code, 1);
}

TEST(Cli, SweepCsvAndSvg) {
    const Outcome csv = run_cli({"sweep", "--suite", "ctqw", "--k-min", "5", "--k-max", "7"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(lines(csv.out).size(), 13u);
    const Outcome svg = run_cli({"sweep", "--suite", "adaptive", "--k-min", "5", "--k-max", "7", "--format", "svg"});
    ASSERT_EQ(svg.code, 0) << svg.err;
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST(Cli, OutFileAndPlot) {
    const auto dir = std::filesystem::temp_directory_path() / "als_cli_test";
    std::filesystem::create_directories(dir);
    const std::string csv = (dir / "s.csv").string();
    const std::string svg = (dir / "s.svg").string();
    ASSERT_EQ(run_cli({"sweep", "--suite", "ctqw", "--k-min", "5", "--k-max", "6", "--out", csv}).code, 0);
    const Outcome o = run_cli({"plot", csv, "--y-field", "cost", "--out", svg});
    ASSERT_EQ(o.code, 0) << o.err;
    std::ifstream in(svg);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("<svg", 0), 0u);
    EXPECT_EQ(run_cli({"plot", csv, "--y-field", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"plot", (dir / "missing.csv").string()}).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrorsExitTwo) {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"gap", "--n-exp", "0"},
        {"gap", "--n-exp", "54"},
        {"gap", "--epsilon", "0"},
        {"gap", "--epsilon", "-1"},
        {"gap", "--threshold", "0"},
        {"gap", "--samples", "2"},
        {"gap", "--model", "nope"},
        {"gap", "--unknown"},
        {"gap", "--format", "svg"},
        {"sluggish", "--window", "0.6,0.4"},
        {"sluggish", "--window", "abc"},
        {"evolve", "--steps", "0"},
        {"sweep", "--suite", "other"},
        {"sweep", "--suite", "ctqw", "--k-min", "9", "--k-max", "8"},
    };
    for (const auto& args : bad) {
        const Outcome o = run_cli(args);
        EXPECT_EQ(o.code, 2) << (args.empty() ? "" : args[0]) << ' ' << (args.size() > 1 ? args[1] : "");
        EXPECT_TRUE(o.out.empty());
        EXPECT_FALSE(o.err.empty());
    }
}

TEST(Cli, IoErrorExitsOne) {
    const Outcome o = run_cli({"gap", "--samples", "3", "--out", "/nonexistent-dir/x.csv"});
    EXPECT_EQ(o.code, 1);
    EXPECT_FALSE(o.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"sweep", "--suite", "adaptive", "--k-min", "5", "--k-max", "9"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "als/error.hpp"
#include "als/experiments.hpp"

using namespace als;

namespace {

const std::vector<SweepRecord>& ctqw() {
    static const std::vector<SweepRecord> r = sweep_ctqw(1.0);
    return r;
}

const std::vector<SweepRecord>& adaptive_records() {
    static const std::vector<SweepRecord> r = sweep_adaptive(1.0);
    return r;
}

const SweepRecord& find(const std::vector<SweepRecord>& rs, const std::string& family, int k) {
    for (const SweepRecord& r : rs) {
        if (model_family(r.model_name) == family && r.n_exponent == k) return r;
    }
    throw std::runtime_error("missing record " + family);
}

}  // namespace

TEST(Sweep, CtqwShape) {
    const auto& rs = ctqw();
    ASSERT_EQ(rs.size(), 84u);
    std::set<std::pair<std::string, int>> keys;
    for (const SweepRecord& r : rs) {
        EXPECT_FALSE(r.error.has_value()) << r.model_name;
        EXPECT_LE(r.sluggish_time, r.total_time);
        EXPECT_GE(r.cost, r.total_time * (1 - 1e-12));
        keys.insert({r.model_name, r.n_exponent});
    }
    EXPECT_EQ(keys.size(), rs.size());
}

TEST(Sweep, AdaptiveShape) {
    const auto& rs = adaptive_records();
    ASSERT_EQ(rs.size(), 84u);
    std::set<std::pair<std::string, int>> keys;
    for (const SweepRecord& r : rs) {
        EXPECT_FALSE(r.error.has_value());
        EXPECT_LE(r.sluggish_time, r.total_time);
        EXPECT_TRUE(r.window_found);
        keys.insert({r.model_name, r.n_exponent});
    }
    EXPECT_EQ(keys.size(), rs.size());
}

TEST(Sweep, AdaptiveEmptyWindowAtSmallN) {
    const auto rs = sweep_adaptive(1.0, 64.0, {1, 2});
    ASSERT_EQ(rs.size(), 8u);
    for (const SweepRecord& r : rs) {
        EXPECT_FALSE(r.window_found);
        EXPECT_EQ(r.sluggish_time, 0.0);
    }
}

TEST(Sweep, OrgIsConstantTime) {
    double lo = INFINITY;
    double hi = 0;
    for (const SweepRecord& r : ctqw()) {
        if (r.model_name != "org") continue;
        lo = std::min(lo, r.total_time);
        hi = std::max(hi, r.total_time);
    }
    EXPECT_LE(hi / lo, 2.0);
}

TEST(Sweep, BaselineScalesAsSqrtN) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const SweepRecord& r : ctqw()) {
        if (r.model_name != "baseline" || r.n_exponent < 10) continue;
        const double x = r.n_exponent * std::log(2.0);
        const double y = std::log(r.total_time);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    EXPECT_NEAR(slope, 0.5, 0.02);
}

TEST(Sweep, RatiosInvariantUnderEpsilon) {
    const auto half = sweep_ctqw(0.5, {8, 12});
    const auto one = sweep_ctqw(1.0, {8, 12});
    ASSERT_EQ(half.size(), one.size());
    for (int k = 8; k <= 12; ++k) {
        const double r_half = find(half, "m2", k).total_time / find(half, "baseline", k).total_time;
        const double r_one = find(one, "m2", k).total_time / find(one, "baseline", k).total_time;
        EXPECT_NEAR(r_half, r_one, 1e-8 * r_one);
    }
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_NEAR(half[i].total_time, 2 * one[i].total_time, 1e-8 * half[i].total_time);
    }
}

TEST(Sweep, RangeValidation) {
    EXPECT_THROW(sweep_ctqw(1.0, {5, 4}), DomainError);
    EXPECT_THROW(sweep_ctqw(1.0, {0, 4}), DomainError);
    EXPECT_THROW(sweep_ctqw(1.0, {5, 54}), DomainError);
    EXPECT_THROW(sweep_ctqw(0.0, {5, 6}), DomainError);
}

TEST(Csv, HeaderAndRowCount) {
    std::ostringstream os;
    write_csv(ctqw(), os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, kSweepCsvHeader);
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 84);
}

TEST(Csv, RoundTripIsBitExact) {
    for (const auto* rs : {&ctqw(), &adaptive_records()}) {
        std::stringstream ss;
        write_csv(*rs, ss);
        const auto back = read_csv(ss);
        ASSERT_EQ(back.size(), rs->size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            const SweepRecord& a = (*rs)[i];
            const SweepRecord& b = back[i];
            EXPECT_EQ(a.model_name, b.model_name);
            EXPECT_EQ(a.n_exponent, b.n_exponent);
            EXPECT_EQ(a.epsilon, b.epsilon);
            EXPECT_EQ(a.s_strt, b.s_strt);
            EXPECT_EQ(a.s_stp, b.s_stp);
            EXPECT_EQ(a.total_time, b.total_time);
            EXPECT_EQ(a.sluggish_time, b.sluggish_time);
            EXPECT_EQ(a.cost, b.cost);
            EXPECT_EQ(a.window_found, b.window_found);
        }
    }
}

TEST(Csv, FormatDouble) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(64.0), "64");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, ReadRejectsMalformed) {
    std::istringstream bad_header("a,b\n1,2\n");
    EXPECT_THROW(read_csv(bad_header), std::invalid_argument);
    std::istringstream bad_row(std::string(kSweepCsvHeader) + "\nbaseline,5,1,0,0,x,0,0,true\n");
    EXPECT_THROW(read_csv(bad_row), std::invalid_argument);
}

TEST(Csv, EmitErrors) {
    const auto dir = std::filesystem::temp_directory_path() / "als_emit_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "empty.csv";
    std::filesystem::remove(path);
    EXPECT_THROW(emit_csv({}, path), DomainError);
    EXPECT_FALSE(std::filesystem::exists(path));
    EXPECT_THROW(emit_csv(ctqw(), dir / "no_such_dir" / "x.csv"), IoError);
    emit_csv(ctqw(), dir / "ok.csv");
    std::ifstream in(dir / "ok.csv");
    EXPECT_EQ(read_csv(in).size(), 84u);
    std::filesystem::remove_all(dir);
}

TEST(Svg, DeterministicAndWellFormed) {
    const std::string a = render_svg(ctqw(), "total_time");
    const std::string b = render_svg(ctqw(), "total_time");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("<svg", 0), 0u);
    EXPECT_NE(a.find("</svg>"), std::string::npos);
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n') > 0, true);
    EXPECT_NE(a.find("polyline"), std::string::npos);
    for (const char* fam : {"baseline", "org", "m1", "m2"}) EXPECT_NE(a.find(fam), std::string::npos) << fam;
    EXPECT_THROW(render_svg(ctqw(), "bogus"), std::invalid_argument);
}

TEST(Svg, AdaptiveFamiliesGrouped) {
    const std::string s = render_svg(adaptive_records(), "sluggish_time");
    EXPECT_NE(s.find("adaptive-grid"), std::string::npos);
    EXPECT_EQ(s.find("[a="), std::string::npos);
}

TEST(ModelFamily, StripsParameters) {
    EXPECT_EQ(model_family("adaptive-grid[a=0.9;b=0.43]"), "adaptive-grid");
    EXPECT_EQ(model_family("m1"), "m1");
}

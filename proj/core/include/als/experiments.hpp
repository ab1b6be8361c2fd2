#pragma once

// Deterministic N = 2^k sweeps comparing the catalyst models against the
// baseline local-adiabatic search, plus their CSV / SVG artifacts.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace als {

struct SweepRecord {
    std::string model_name;
    int n_exponent = 0;
    double epsilon = 1.0;
    double s_strt = 0.0;
    double s_stp = 0.0;
    double total_time = 0.0;
    double sluggish_time = 0.0;
    double cost = 0.0;
    bool window_found = false;
    /// Set when the record could not be computed; numeric fields are NaN then.
    /// Not serialized.
    std::optional<std::string> error;
};

struct ExponentRange {
    int first = 5;
    int last = 25;
};

/// baseline, org, m1, m2 over the full schedule for every k. The sluggish
/// columns use each model's own detected window.
std::vector<SweepRecord> sweep_ctqw(double epsilon, ExponentRange k_range = {}, double threshold = 64.0);

/// For every k: detect the baseline window, then evaluate baseline,
/// adaptive-ss, adaptive-sine and the best adaptive-grid inside it. The grid
/// record is named "adaptive-grid[a=...;b=...]".
std::vector<SweepRecord> sweep_adaptive(double epsilon, double threshold = 64.0, ExponentRange k_range = {});

inline constexpr std::string_view kSweepCsvHeader =
    "model,n_exponent,epsilon,s_strt,s_stp,total_time,sluggish_time,cost,window_found";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out);
std::vector<SweepRecord> read_csv(std::istream& in);

/// Throws DomainError on an empty record list (no file is created) and
/// IoError when the path cannot be written.
void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path);

/// Line chart of y_field against log2(N), one polyline per model family.
/// y_field is one of total_time, sluggish_time, cost, s_strt, s_stp.
std::string render_svg(const std::vector<SweepRecord>& records, std::string_view y_field);
void emit_svg(const std::vector<SweepRecord>& records, const std::filesystem::path& path, std::string_view y_field);

/// "adaptive-grid[a=0.9;b=...]" -> "adaptive-grid".
std::string model_family(std::string_view model_name);

}  // namespace als

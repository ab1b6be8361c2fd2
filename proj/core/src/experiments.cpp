#include "als/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "als/error.hpp"
#include "als/gridsearch.hpp"
#include "als/models.hpp"
#include "als/sluggish.hpp"
#include "als/timemap.hpp"

namespace als {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_range(const ExponentRange& r) {
    if (r.first < 1 || r.last > 53 || r.first > r.last) throw DomainError("exponent range must satisfy 1 <= first <= last <= 53");
}

SweepRecord failed(std::string name, int k, double epsilon, const std::exception& e) {
    SweepRecord r;
    r.model_name = std::move(name);
    r.n_exponent = k;
    r.epsilon = epsilon;
    r.s_strt = r.s_stp = r.total_time = r.sluggish_time = r.cost = kNaN;
    r.error = e.what();
    return r;
}

SweepRecord measure(const ScheduleModel& model, const std::string& name, int k, double epsilon,
                    const SluggishWindow& window) {
    SweepRecord r;
    r.model_name = name;
    r.n_exponent = k;
    r.epsilon = epsilon;
    r.window_found = !window.empty;
    r.s_strt = window.s_strt;
    r.s_stp = window.s_stp;
    r.total_time = total_time(model, 0.0, 1.0, epsilon);
    r.sluggish_time = sluggish_time(model, window, epsilon);
    r.cost = r.total_time * max_spectral_norm(model);
    return r;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad number in CSV: " + s);
    return v;
}

int parse_int(const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer in CSV: " + s);
    return v;
}

double field_value(const SweepRecord& r, std::string_view field) {
    if (field == "total_time") return r.total_time;
    if (field == "sluggish_time") return r.sluggish_time;
    if (field == "cost") return r.cost;
    if (field == "s_strt") return r.s_strt;
    if (field == "s_stp") return r.s_stp;
    throw std::invalid_argument("unknown plot field: " + std::string(field));
}

// 1, 2 or 5 times a power of ten, at least raw.
double nice_step(double raw) {
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

std::string fixed(double x, int digits = 2) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << std::fixed << std::setprecision(digits) << x;
    return ss.str();
}

std::string tick_label(double x) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << std::setprecision(6) << x;
    return ss.str();
}

template <typename Writer>
void write_to_path(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    writer(out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
}

}  // namespace

std::vector<SweepRecord> sweep_ctqw(double epsilon, ExponentRange k_range, double threshold) {
    require_range(k_range);
    require_epsilon(epsilon);
    using Factory = ScheduleModel (*)(double);
    const std::pair<const char*, Factory> families[] = {
        {"baseline", &baseline}, {"org", &ctqw_org}, {"m1", &m1}, {"m2", &m2}};

    SluggishOptions opts;
    opts.threshold = threshold;
    std::vector<SweepRecord> out;
    for (const auto& [name, make] : families) {
        for (int k = k_range.first; k <= k_range.last; ++k) {
            try {
                const ScheduleModel model = make(std::ldexp(1.0, k));
                out.push_back(measure(model, name, k, epsilon, detect_sluggish(model, epsilon, opts)));
            } catch (const DomainError& e) {
                out.push_back(failed(name, k, epsilon, e));
            }
        }
    }
    return out;
}

std::vector<SweepRecord> sweep_adaptive(double epsilon, double threshold, ExponentRange k_range) {
    require_range(k_range);
    require_epsilon(epsilon);
    SluggishOptions opts;
    opts.threshold = threshold;

    std::map<int, SluggishWindow> windows;
    for (int k = k_range.first; k <= k_range.last; ++k) {
        windows[k] = detect_sluggish(baseline(std::ldexp(1.0, k)), epsilon, opts);
    }

    std::vector<SweepRecord> out;
    auto run = [&](const std::string& name, auto&& body) {
        for (int k = k_range.first; k <= k_range.last; ++k) {
            try {
                out.push_back(body(std::ldexp(1.0, k), k, windows.at(k)));
            } catch (const DomainError& e) {
                out.push_back(failed(name, k, epsilon, e));
            }
        }
    };

    run("baseline", [&](double n, int k, const SluggishWindow& w) {
        return measure(baseline(n), "baseline", k, epsilon, w);
    });
    run("adaptive-ss", [&](double n, int k, const SluggishWindow& w) {
        return measure(adaptive(n, w, AdaptiveCoefficient::ss()), "adaptive-ss", k, epsilon, w);
    });
    run("adaptive-sine", [&](double n, int k, const SluggishWindow& w) {
        return measure(adaptive(n, w, AdaptiveCoefficient::sine()), "adaptive-sine", k, epsilon, w);
    });
    run("adaptive-grid", [&](double n, int k, const SluggishWindow& w) {
        if (w.empty) return measure(baseline(n), "adaptive-grid", k, epsilon, w);
        const GridResult g = grid_search(n, w, epsilon);
        const std::string name =
            "adaptive-grid[a=" + format_double(g.best_a) + ";b=" + format_double(g.best_b) + "]";
        return measure(adaptive(n, w, AdaptiveCoefficient::grid(g.best_a, g.best_b)), name, k, epsilon, w);
    });
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::runtime_error("format_double: buffer too small");
    return {buf, ptr};
}

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRecord& r : records) {
        out << r.model_name << ',' << r.n_exponent << ',' << format_double(r.epsilon) << ',' << format_double(r.s_strt)
            << ',' << format_double(r.s_stp) << ',' << format_double(r.total_time) << ','
            << format_double(r.sluggish_time) << ',' << format_double(r.cost) << ','
            << (r.window_found ? "true" : "false") << '\n';
    }
}

std::vector<SweepRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) throw std::invalid_argument("CSV header mismatch");
    std::vector<SweepRecord> out;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 9) throw std::invalid_argument("CSV row must have 9 fields: " + line);
        SweepRecord r;
        r.model_name = f[0];
        r.n_exponent = parse_int(f[1]);
        r.epsilon = parse_double(f[2]);
        r.s_strt = parse_double(f[3]);
        r.s_stp = parse_double(f[4]);
        r.total_time = parse_double(f[5]);
        r.sluggish_time = parse_double(f[6]);
        r.cost = parse_double(f[7]);
        if (f[8] == "true") {
            r.window_found = true;
        } else if (f[8] == "false") {
            r.window_found = false;
        } else {
            throw std::invalid_argument("CSV flag must be true/false: " + f[8]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
    if (records.empty()) throw DomainError("emit_csv: no records");
    write_to_path(path, [&](std::ostream& out) { write_csv(records, out); });
}

std::string model_family(std::string_view model_name) {
    return std::string(model_name.substr(0, model_name.find('[')));
}

std::string render_svg(const std::vector<SweepRecord>& records, std::string_view y_field) {
    if (records.empty()) throw DomainError("render_svg: no records");

    constexpr double width = 760.0;
    constexpr double height = 460.0;
    constexpr double left = 80.0;
    constexpr double right = 190.0;
    constexpr double top = 30.0;
    constexpr double bottom = 55.0;
    constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                       "#9467bd", "#8c564b", "#e377c2", "#17becf"};

    std::vector<std::string> families;
    std::map<std::string, std::vector<std::pair<int, double>>> series;
    int k_min = records.front().n_exponent;
    int k_max = k_min;
    double y_min = 0.0;
    double y_max = 0.0;
    bool any = false;
    for (const SweepRecord& r : records) {
        const std::string fam = model_family(r.model_name);
        if (std::find(families.begin(), families.end(), fam) == families.end()) families.push_back(fam);
        const double y = field_value(r, y_field);
        k_min = std::min(k_min, r.n_exponent);
        k_max = std::max(k_max, r.n_exponent);
        if (!std::isfinite(y)) continue;
        series[fam].emplace_back(r.n_exponent, y);
        y_min = any ? std::min(y_min, y) : std::min(0.0, y);
        y_max = any ? std::max(y_max, y) : y;
        any = true;
    }
    if (k_max == k_min) {
        --k_min;
        ++k_max;
    }
    if (!(y_max > y_min)) y_max = y_min + 1.0;
    const double y_step = nice_step((y_max - y_min) / 5.0);
    y_min = std::floor(y_min / y_step) * y_step;
    y_max = std::ceil(y_max / y_step) * y_step;

    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto px = [&](double k) { return left + (k - k_min) / (k_max - k_min) * plot_w; };
    auto py = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

    std::ostringstream svg;
    svg.imbue(std::locale::classic());
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0)
        << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0) << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(left + plot_w)
        << "\" y2=\"" << fixed(top + plot_h) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left) << "\" y2=\""
        << fixed(top + plot_h) << "\" stroke=\"black\"/>\n";
    const int k_tick = std::max(1, (k_max - k_min) / 10);
    for (int k = k_min; k <= k_max; k += k_tick) {
        svg << "<line x1=\"" << fixed(px(k)) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(px(k))
            << "\" y2=\"" << fixed(top + plot_h + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fixed(px(k)) << "\" y=\"" << fixed(top + plot_h + 19) << "\" text-anchor=\"middle\">" << k
            << "</text>\n";
    }
    for (double y = y_min; y <= y_max + 0.5 * y_step; y += y_step) {
        svg << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(py(y)) << "\" x2=\"" << fixed(left + plot_w)
            << "\" y2=\"" << fixed(py(y)) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(y) + 4) << "\" text-anchor=\"end\">"
            << tick_label(y) << "</text>\n";
    }
    svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 12)
        << "\" text-anchor=\"middle\">log2(N)</text>\n";
    svg << "<text x=\"18\" y=\"" << fixed(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fixed(top + plot_h / 2) << ")\">" << y_field << "</text>\n";

    for (std::size_t i = 0; i < families.size(); ++i) {
        const char* colour = palette[i % std::size(palette)];
        const auto& pts = series[families[i]];
        if (!pts.empty()) {
            svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
            for (std::size_t j = 0; j < pts.size(); ++j) {
                svg << (j ? " " : "") << fixed(px(pts[j].first)) << ',' << fixed(py(pts[j].second));
            }
            svg << "\"/>\n";
        }
        const double ly = top + 10 + 20.0 * static_cast<double>(i);
        const double lx = left + plot_w + 15;
        svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 24) << "\" y2=\""
            << fixed(ly) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fixed(lx + 30) << "\" y=\"" << fixed(ly + 4) << "\">" << families[i] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(const std::vector<SweepRecord>& records, const std::filesystem::path& path, std::string_view y_field) {
    const std::string body = render_svg(records, y_field);
    write_to_path(path, [&](std::ostream& out) { out << body; });
}

}  // namespace als

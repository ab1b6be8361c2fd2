#include "cli.hpp"

#include <CLI11.hpp>

#include <climits>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "als/error.hpp"
#include "als/evolution.hpp"
#include "als/experiments.hpp"
#include "als/gridsearch.hpp"
#include "als/models.hpp"
#include "als/sluggish.hpp"
#include "als/timemap.hpp"

namespace als::cli {

namespace {

enum class ModelKind { baseline, org, m1, m2, adaptive_sine, adaptive_ss, adaptive_grid };

const std::map<std::string, ModelKind> kModelNames{
    {"baseline", ModelKind::baseline},           {"org", ModelKind::org},
    {"m1", ModelKind::m1},                       {"m2", ModelKind::m2},
    {"adaptive-sine", ModelKind::adaptive_sine}, {"adaptive-ss", ModelKind::adaptive_ss},
    {"adaptive-grid", ModelKind::adaptive_grid},
};

struct Config {
    std::string model = "baseline";
    int n_exponent = 6;
    double epsilon = 1.0;
    double threshold = 64.0;
    int samples = 100001;
    int steps = 200000;
    std::optional<double> a;
    std::optional<double> b;
    std::string window;
    std::string out = "-";
    std::string format = "csv";
    double step = 0.1;
    bool adaptive_magnitude = false;

    std::string suite = "ctqw";
    int k_min = 5;
    int k_max = 25;
    std::string y_field;
    std::string input = "-";
    bool check_doubling = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double n_of(const Config& c) { return std::ldexp(1.0, c.n_exponent); }

bool is_adaptive(ModelKind k) {
    return k == ModelKind::adaptive_sine || k == ModelKind::adaptive_ss || k == ModelKind::adaptive_grid;
}

std::optional<SluggishWindow> parse_window(const std::string& text, double threshold) {
    if (text.empty()) return std::nullopt;
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--window expects lo,hi");
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = text.substr(0, comma);
        const std::string hi_text = text.substr(comma + 1);
        const double lo = std::stod(lo_text, &used_lo);
        const double hi = std::stod(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw UsageError("--window expects lo,hi");
        if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) throw UsageError("--window needs 0 <= lo < hi <= 1");
        return SluggishWindow::span(lo, hi, threshold);
    } catch (const std::logic_error&) {
        throw UsageError("--window expects two numbers lo,hi");
    }
}

SluggishWindow baseline_window(const Config& c) {
    if (auto w = parse_window(c.window, c.threshold)) return *w;
    SluggishOptions opts;
    opts.threshold = c.threshold;
    return detect_sluggish(baseline(n_of(c)), c.epsilon, opts);
}

ScheduleModel make_model(const Config& c) {
    const double n = n_of(c);
    const ModelKind kind = kModelNames.at(c.model);
    switch (kind) {
        case ModelKind::baseline:
            return baseline(n);
        case ModelKind::org:
            return ctqw_org(n);
        case ModelKind::m1:
            return m1(n);
        case ModelKind::m2:
            return m2(n);
        default:
            break;
    }
    const SluggishWindow w = baseline_window(c);
    const double magnitude = c.adaptive_magnitude ? catalyst_magnitude(n) : 1.0;
    if (kind == ModelKind::adaptive_sine) return adaptive(n, w, AdaptiveCoefficient::sine(), magnitude);
    if (kind == ModelKind::adaptive_ss) return adaptive(n, w, AdaptiveCoefficient::ss(), magnitude);
    if (w.empty) return baseline(n);
    if (c.a) {
        const double a = *c.a;
        const double b = c.b ? *c.b : std::sqrt(std::max(0.0, 1.0 - a * a));
        return adaptive(n, w, AdaptiveCoefficient::grid(a, b), magnitude);
    }
    const GridResult g = grid_search(n, w, c.epsilon, c.step);
    return adaptive(n, w, AdaptiveCoefficient::grid(g.best_a, g.best_b), magnitude);
}

double sample_point(int i, int samples) { return i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1); }

// Writes to `out` for "-", otherwise to the named file.
void with_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path == "-") {
        body(out);
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open for writing: " + path);
    body(file);
    file.flush();
    if (!file) throw IoError("write failed: " + path);
}

void require_csv(const Config& c, const char* sub) {
    if (c.format != "csv") throw UsageError(std::string(sub) + " only writes csv");
}

void cmd_gap(const Config& c, std::ostream& out) {
    require_csv(c, "gap");
    const ScheduleModel model = make_model(c);
    with_output(c.out, out, [&](std::ostream& os) {
        os << "s,g2\n";
        for (int i = 0; i < c.samples; ++i) {
            const double s = sample_point(i, c.samples);
            os << format_double(s) << ',' << format_double(gap2(model, s)) << '\n';
        }
    });
}

void cmd_timemap(const Config& c, std::ostream& out) {
    require_csv(c, "timemap");
    const TimeMap tm(make_model(c), c.epsilon);
    with_output(c.out, out, [&](std::ostream& os) {
        os << "s,t,dt_ds,d2t_ds2,g2\n";
        for (int i = 0; i < c.samples; ++i) {
            const double s = sample_point(i, c.samples);
            os << format_double(s) << ',' << format_double(tm.time_at(s)) << ','
               << format_double(dt_ds(tm.model(), s, c.epsilon)) << ','
               << format_double(d2t_ds2(tm.model(), s, c.epsilon)) << ',' << format_double(gap2(tm.model(), s))
               << '\n';
        }
    });
}

void cmd_sluggish(const Config& c, std::ostream& out) {
    require_csv(c, "sluggish");
    const ScheduleModel model = make_model(c);
    SluggishWindow w;
    if (is_adaptive(kModelNames.at(c.model))) {
        w = baseline_window(c);
    } else if (auto manual = parse_window(c.window, c.threshold)) {
        w = *manual;
    } else {
        SluggishOptions opts;
        opts.threshold = c.threshold;
        opts.grid_points = c.samples;
        w = detect_sluggish(model, c.epsilon, opts);
    }
    const double t = sluggish_time(model, w, c.epsilon);
    with_output(c.out, out, [&](std::ostream& os) {
        os << "model,n_exponent,epsilon,threshold,s_strt,s_stp,sluggish_time,window_found\n";
        os << c.model << ',' << c.n_exponent << ',' << format_double(c.epsilon) << ',' << format_double(c.threshold)
           << ',' << format_double(w.s_strt) << ',' << format_double(w.s_stp) << ',' << format_double(t) << ','
           << (w.empty ? "false" : "true") << '\n';
    });
}

void cmd_grid(const Config& c, std::ostream& out) {
    require_csv(c, "grid");
    const SluggishWindow w = baseline_window(c);
    const GridResult g = grid_search(n_of(c), w, c.epsilon, c.step);
    with_output(c.out, out, [&](std::ostream& os) {
        os << "a,b,sluggish_time\n";
        for (const GridEvaluation& e : g.evaluations) {
            os << format_double(e.a) << ',' << format_double(e.b) << ',' << format_double(e.time) << '\n';
        }
        os << "# best a=" << format_double(g.best_a) << ",b=" << format_double(g.best_b) << '\n';
    });
}

void cmd_sweep(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.suite != "ctqw" && c.suite != "adaptive") throw UsageError("--suite must be ctqw or adaptive");
    if (c.k_min > c.k_max) throw UsageError("--k-min must not exceed --k-max");
    const ExponentRange range{c.k_min, c.k_max};
    const std::vector<SweepRecord> records =
        c.suite == "ctqw" ? sweep_ctqw(c.epsilon, range, c.threshold) : sweep_adaptive(c.epsilon, c.threshold, range);
    for (const SweepRecord& r : records) {
        if (r.error) err << "warning: " << r.model_name << " k=" << r.n_exponent << ": " << *r.error << '\n';
    }
    if (c.format == "svg") {
        const std::string field = !c.y_field.empty() ? c.y_field : (c.suite == "ctqw" ? "total_time" : "sluggish_time");
        const std::string body = render_svg(records, field);
        with_output(c.out, out, [&](std::ostream& os) { os << body; });
    } else {
        with_output(c.out, out, [&](std::ostream& os) { write_csv(records, os); });
    }
}

void cmd_evolve(const Config& c, std::ostream& out) {
    require_csv(c, "evolve");
    const ScheduleModel model = make_model(c);
    const TimeMap tm(model, c.epsilon);
    const EvolutionResult r = evolve(model, tm, c.steps);
    std::optional<StepCheck> check;
    if (c.check_doubling) check = check_step_convergence(model, tm, c.steps);
    with_output(c.out, out, [&](std::ostream& os) {
        os << "model,n_exponent,epsilon,steps,total_time,fidelity_omega,max_norm_drift";
        if (check) os << ",fidelity_doubled,step_doubling_delta,converged";
        os << '\n';
        os << c.model << ',' << c.n_exponent << ',' << format_double(c.epsilon) << ',' << c.steps << ','
           << format_double(r.total_time) << ',' << format_double(r.fidelity_omega) << ','
           << format_double(r.max_norm_drift);
        if (check) {
            os << ',' << format_double(check->fidelity_doubled) << ',' << format_double(check->delta) << ','
               << (check->converged ? "true" : "false");
        }
        os << '\n';
    });
}

void cmd_plot(const Config& c, std::ostream& out, std::istream& in) {
    std::vector<SweepRecord> records;
    if (c.input == "-") {
        records = read_csv(in);
    } else {
        std::ifstream file(c.input, std::ios::binary);
        if (!file) throw IoError("cannot open " + c.input);
        records = read_csv(file);
    }
    const std::string body = render_svg(records, c.y_field.empty() ? "total_time" : c.y_field);
    with_output(c.out, out, [&](std::ostream& os) { os << body; });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Adiabatic local search schedules with catalyst Hamiltonians", "alsearch"};
    app.require_subcommand(1);

    std::vector<std::string> model_choices;
    for (const auto& [name, kind] : kModelNames) model_choices.push_back(name);

    auto add_model_opts = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "Schedule model")->check(CLI::IsMember(model_choices))->capture_default_str();
        sub->add_option("--n-exp", cfg.n_exponent, "Search space size N = 2^k")
            ->check(CLI::Range(1, 53))
            ->capture_default_str();
        sub->add_option("--epsilon", cfg.epsilon, "Adiabatic precision parameter")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--threshold", cfg.threshold, "Sluggish threshold on |d2t/ds2|")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--window", cfg.window, "Manual sluggish window lo,hi");
        sub->add_option("--a", cfg.a, "Grid coefficient a (b defaults to sqrt(1-a^2))")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--b", cfg.b, "Grid coefficient b")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--step", cfg.step, "Grid search step in a")->check(CLI::Range(1e-6, 1.0))->capture_default_str();
        sub->add_flag("--adaptive-magnitude", cfg.adaptive_magnitude,
                      "Scale adaptive Z catalysts by M = 2 sqrt((N-1)/N)");
    };
    auto add_io_opts = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Output path, - for stdout")->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "svg"}))->capture_default_str();
    };
    auto add_samples = [&](CLI::App* sub) {
        sub->add_option("--samples", cfg.samples, "Number of s samples")
            ->check(CLI::Range(3, INT_MAX))
            ->capture_default_str();
    };

    CLI::App* gap = app.add_subcommand("gap", "Sample g^2(s)");
    add_model_opts(gap);
    add_io_opts(gap);
    add_samples(gap);

    CLI::App* timemap = app.add_subcommand("timemap", "Sample s, t, dt/ds, d2t/ds2, g^2");
    add_model_opts(timemap);
    add_io_opts(timemap);
    add_samples(timemap);

    CLI::App* sluggish = app.add_subcommand("sluggish", "Detect the sluggish window and the time spent in it");
    add_model_opts(sluggish);
    add_io_opts(sluggish);
    add_samples(sluggish);

    CLI::App* grid = app.add_subcommand("grid", "Grid search over the (a, b) catalyst coefficients");
    add_model_opts(grid);
    add_io_opts(grid);

    CLI::App* sweep = app.add_subcommand("sweep", "Reproduce the N = 2^k model comparisons");
    sweep->add_option("--suite", cfg.suite, "ctqw or adaptive")->check(CLI::IsMember({"ctqw", "adaptive"}))->required();
    sweep->add_option("--epsilon", cfg.epsilon, "Adiabatic precision parameter")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--threshold", cfg.threshold, "Sluggish threshold")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--k-min", cfg.k_min, "Smallest exponent")->check(CLI::Range(1, 53))->capture_default_str();
    sweep->add_option("--k-max", cfg.k_max, "Largest exponent")->check(CLI::Range(1, 53))->capture_default_str();
    sweep->add_option("--y-field", cfg.y_field, "Column plotted when --format svg");
    add_io_opts(sweep);

    CLI::App* evolve_cmd = app.add_subcommand("evolve", "Integrate the Schroedinger equation along the schedule");
    add_model_opts(evolve_cmd);
    add_io_opts(evolve_cmd);
    evolve_cmd->add_option("--steps", cfg.steps, "Time steps")->check(CLI::Range(1, INT_MAX))->capture_default_str();
    evolve_cmd->add_flag("--check-doubling", cfg.check_doubling, "Also run with twice the steps");

    CLI::App* plot = app.add_subcommand("plot", "Render a sweep CSV as SVG");
    plot->add_option("input", cfg.input, "Sweep CSV, - for stdin")->capture_default_str();
    plot->add_option("--y-field", cfg.y_field, "Column to plot (default total_time)");
    plot->add_option("--out", cfg.out, "Output path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gap) cmd_gap(cfg, out);
        if (*timemap) cmd_timemap(cfg, out);
        if (*sluggish) cmd_sluggish(cfg, out);
        if (*grid) cmd_grid(cfg, out);
        if (*sweep) cmd_sweep(cfg, out, err);
        if (*evolve_cmd) cmd_evolve(cfg, out);
        if (*plot) cmd_plot(cfg, out, std::cin);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace als::cli

#include "als/timemap.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "als/error.hpp"
#include "als/quadrature.hpp"

namespace als {

namespace {

constexpr int kScanIntervals = 1024;
constexpr double kFiniteDifferenceStep = 1e-7;
constexpr int kCostGridIntervals = 10000;

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
}

void require_interval(double lo, double hi) {
    if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
        throw DomainError("schedule interval must satisfy 0 <= s_strt <= s_stp <= 1");
    }
}

double positive_gap2(const ScheduleModel& model, double s) {
    const double g2 = gap2(model, s);
    if (!(g2 > 0.0)) throw DomainError("gap collapses at s = " + std::to_string(s));
    return g2;
}

double gap2_derivative(const ScheduleModel& model, double s) {
    if (const auto q = quadratic_gap(model)) return q->derivative(s);
    const double h = kFiniteDifferenceStep;
    auto g = [&](double x) { return gap2(model, x); };
    if (s - h < 0.0) return (-3.0 * g(s) + 4.0 * g(s + h) - g(s + 2.0 * h)) / (2.0 * h);
    if (s + h > 1.0) return (3.0 * g(s) - 4.0 * g(s - h) + g(s - 2.0 * h)) / (2.0 * h);
    return (g(s + h) - g(s - h)) / (2.0 * h);
}

}  // namespace

QuadraticGap::QuadraticGap(double amp, double lin, double constant) : amp_(amp), lin_(lin), constant_(constant) {
    if (!std::isfinite(amp) || !std::isfinite(lin) || !std::isfinite(constant)) {
        throw DomainError("QuadraticGap: non-finite coefficient");
    }
    if (!(amp > 0.0)) throw DomainError("QuadraticGap: leading factor must be positive");
    const double disc = discriminant();
    const double center = -0.5 * lin;
    if (disc == 0.0 && center >= 0.0 && center <= 1.0) {
        throw DomainError("QuadraticGap: double root inside [0, 1]");
    }
    if (disc > 0.0) {
        const double half_width = 0.5 * std::sqrt(disc);
        const double r_minus = center - half_width;
        const double r_plus = center + half_width;
        if (!(r_plus < 0.0 || r_minus > 1.0)) throw DomainError("QuadraticGap: g^2 vanishes or turns negative on [0, 1]");
    }
}

std::optional<QuadraticGap> quadratic_gap(const ScheduleModel& model) {
    if (!model.catalyst_free()) return std::nullopt;
    const Hermitian2& h0 = model.h0();
    const Hermitian2& hf = model.hf();
    // g^2 = D(s)^2 + 4 O(s)^2 + 4 Y(s)^2, each linear in s
    const double d0 = h0.a() - h0.b();
    const double dd = (hf.a() - hf.b()) - d0;
    const double o0 = h0.c();
    const double od = hf.c() - o0;
    const double y0 = h0.d();
    const double yd = hf.d() - y0;
    const double alpha = dd * dd + 4.0 * (od * od + yd * yd);
    const double beta = 2.0 * (d0 * dd + 4.0 * (o0 * od + y0 * yd));
    const double gamma = d0 * d0 + 4.0 * (o0 * o0 + y0 * y0);
    if (!(alpha > 0.0)) return std::nullopt;
    try {
        return QuadraticGap(alpha, beta / alpha, gamma / alpha);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

double quad_time(const QuadraticGap& q, double s_lo, double s_hi, double epsilon) {
    require_interval(s_lo, s_hi);
    require_epsilon(epsilon);
    if (s_lo == s_hi) return 0.0;

    // Substitute x = s + lin/2 so that s^2 + lin s + c = x^2 - disc/4.
    const double shift = 0.5 * q.lin();
    const double x_lo = s_lo + shift;
    const double x_hi = s_hi + shift;
    const double disc = q.discriminant();

    double integral = 0.0;
    if (disc < 0.0) {
        // arctan branch: difference of arctans folded into one atan2
        const double a2 = -0.25 * disc;
        const double a = std::sqrt(a2);
        integral = std::atan2(a * (x_hi - x_lo), a2 + x_hi * x_lo) / a;
    } else if (disc == 0.0) {
        integral = (x_hi - x_lo) / (x_hi * x_lo);
    } else {
        // log branch: ln|(x-k)/(x+k)| / 2k between the limits, as atanh
        const double k2 = 0.25 * disc;
        const double k = std::sqrt(k2);
        const double p = x_hi * x_lo - k2;
        const double d = k * (x_hi - x_lo);
        integral = std::atanh(d / p) / k;
    }
    return integral / (epsilon * q.amp());
}

double grover_time(double n, double s, double epsilon) {
    if (!(n >= 2.0)) throw DomainError("grover_time: n must be >= 2");
    require_epsilon(epsilon);
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("grover_time: s must lie in [0, 1]");
    const double root = std::sqrt(n - 1.0);
    return n / (2.0 * epsilon * root) * (std::atan(root * (2.0 * s - 1.0)) + std::atan(root));
}

std::vector<double> quadrature_breakpoints(const ScheduleModel& model, double lo, double hi) {
    std::vector<double> out;
    if (!(hi > lo)) return out;

    std::vector<double> xs(kScanIntervals + 1);
    std::vector<double> vs(kScanIntervals + 1);
    for (int i = 0; i <= kScanIntervals; ++i) {
        xs[i] = i == kScanIntervals ? hi : lo + (hi - lo) * i / kScanIntervals;
        vs[i] = gap2(model, xs[i]);
    }
    for (int i = 1; i < kScanIntervals; ++i) {
        if (!(vs[i] < vs[i - 1] && vs[i] <= vs[i + 1])) continue;
        auto [s_min, g_min] = boost::math::tools::brent_find_minima([&](double s) { return gap2(model, s); },
                                                                    xs[i - 1], xs[i + 1], 26);
        if (!(g_min > 0.0)) throw DomainError("gap collapses at s = " + std::to_string(s_min));
        out.push_back(s_min);
    }
    for (double k : model.kinks()) {
        if (k > lo && k < hi) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double total_time(const ScheduleModel& model, double s_strt, double s_stp, double epsilon) {
    require_interval(s_strt, s_stp);
    require_epsilon(epsilon);
    if (s_strt == s_stp) return 0.0;
    const std::vector<double> breaks = quadrature_breakpoints(model, s_strt, s_stp);
    positive_gap2(model, s_strt);
    positive_gap2(model, s_stp);
    for (double b : breaks) positive_gap2(model, b);
    return integrate_piecewise([&](double s) { return 1.0 / (epsilon * gap2(model, s)); }, s_strt, s_stp, breaks);
}

double dt_ds(const ScheduleModel& model, double s, double epsilon) {
    require_epsilon(epsilon);
    return 1.0 / (epsilon * positive_gap2(model, s));
}

double d2t_ds2(const ScheduleModel& model, double s, double epsilon) {
    require_epsilon(epsilon);
    const double g2 = positive_gap2(model, s);
    return -gap2_derivative(model, s) / (epsilon * g2 * g2);
}

double max_spectral_norm(const ScheduleModel& model) {
    double max_norm = 0.0;
    for (int i = 0; i <= kCostGridIntervals; ++i) {
        const double s = static_cast<double>(i) / kCostGridIntervals;
        max_norm = std::max(max_norm, spectral_norm(assemble(model, s)));
    }
    return max_norm;
}

double cost(const ScheduleModel& model, double epsilon) {
    return total_time(model, 0.0, 1.0, epsilon) * max_spectral_norm(model);
}

TimeMap::TimeMap(ScheduleModel model, double epsilon, int intervals) : model_(std::move(model)), epsilon_(epsilon) {
    require_epsilon(epsilon);
    if (intervals < 1) throw DomainError("TimeMap: need at least one interval");
    breaks_ = quadrature_breakpoints(model_, 0.0, 1.0);
    positive_gap2(model_, 0.0);
    positive_gap2(model_, 1.0);
    for (double b : breaks_) positive_gap2(model_, b);

    s_.resize(static_cast<std::size_t>(intervals) + 1);
    t_.resize(s_.size());
    for (int i = 0; i <= intervals; ++i) s_[i] = i == intervals ? 1.0 : static_cast<double>(i) / intervals;
    t_[0] = 0.0;
    for (std::size_t i = 1; i < s_.size(); ++i) t_[i] = t_[i - 1] + cell_integral(s_[i - 1], s_[i]);
}

double TimeMap::cell_integral(double lo, double hi) const {
    SimpsonOptions opts;
    opts.min_depth = 2;
    auto first = std::upper_bound(breaks_.begin(), breaks_.end(), lo);
    auto last = std::lower_bound(first, breaks_.end(), hi);
    const std::span<const double> inside(first, last);
    return integrate_piecewise([this](double s) { return 1.0 / (epsilon_ * gap2(model_, s)); }, lo, hi, inside,
                               opts);
}

double TimeMap::time_at(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("TimeMap::time_at: s must lie in [0, 1]");
    const std::size_t cells = s_.size() - 1;
    const auto i = std::min(static_cast<std::size_t>(s * static_cast<double>(cells)), cells - 1);
    return t_[i] + cell_integral(s_[i], s);
}

double TimeMap::schedule_of_time(double t) const {
    const double total = t_.back();
    if (!(t >= 0.0) || t > total * (1.0 + 1e-12)) {
        throw DomainError("schedule_of_time: t outside [0, total time]");
    }
    if (t == 0.0) return 0.0;
    t = std::min(t, total);

    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t i = it == t_.end() ? t_.size() - 2 : static_cast<std::size_t>(it - t_.begin()) - 1;
    double lo = s_[i];
    double hi = s_[i + 1];
    const double t_lo = t_[i];
    const double span = t_[i + 1] - t_lo;
    double x = span > 0.0 ? lo + (t - t_lo) / span * (hi - lo) : lo;

    for (int iter = 0; iter < 200; ++iter) {
        const double residual = t_lo + cell_integral(s_[i], x) - t;
        if (residual > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        double next = x - residual * epsilon_ * gap2(model_, x);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-12 || hi - lo <= 1e-12) return next;
        x = next;
    }
    return x;
}

double schedule_of_time(const TimeMap& tm, double t) { return tm.schedule_of_time(t); }

}  // namespace als

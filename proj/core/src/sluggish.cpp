#include "als/sluggish.hpp"

#include <cmath>
#include <vector>

#include "als/error.hpp"
#include "als/timemap.hpp"

namespace als {

namespace {

// Bisects between a grid point that fails the threshold and one that meets it.
double refine_edge(const ScheduleModel& model, double epsilon, double threshold, double outside, double inside,
                   double tol) {
    for (int iter = 0; iter < 200 && std::abs(inside - outside) > tol; ++iter) {
        const double mid = 0.5 * (outside + inside);
        if (std::abs(d2t_ds2(model, mid, epsilon)) >= threshold) {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    return inside;
}

}  // namespace

SluggishWindow detect_sluggish(const ScheduleModel& model, double epsilon, const SluggishOptions& opts) {
    if (!(opts.threshold > 0.0)) throw DomainError("detect_sluggish: threshold must be positive");
    if (opts.grid_points < 3) throw DomainError("detect_sluggish: need at least 3 grid points");

    const int last = opts.grid_points - 1;
    auto grid = [last](int i) { return i == last ? 1.0 : static_cast<double>(i) / last; };

    int first_hit = -1;
    int last_hit = -1;
    for (int i = 0; i <= last; ++i) {
        if (std::abs(d2t_ds2(model, grid(i), epsilon)) >= opts.threshold) {
            if (first_hit < 0) first_hit = i;
            last_hit = i;
        }
    }
    if (first_hit < 0) return SluggishWindow::none(opts.threshold);

    double lo = grid(first_hit);
    double hi = grid(last_hit);
    if (first_hit > 0) lo = refine_edge(model, epsilon, opts.threshold, grid(first_hit - 1), lo, opts.edge_tolerance);
    if (last_hit < last) hi = refine_edge(model, epsilon, opts.threshold, grid(last_hit + 1), hi, opts.edge_tolerance);
    return SluggishWindow::span(lo, hi, opts.threshold);
}

double sluggish_time(const ScheduleModel& model, const SluggishWindow& w, double epsilon) {
    if (w.empty) return 0.0;
    return total_time(model, w.s_strt, w.s_stp, epsilon);
}

}  // namespace als

#pragma once

#include "als/models.hpp"
#include "als/window.hpp"

namespace als {

struct SluggishOptions {
    double threshold = 64.0;
    int grid_points = 100001;
    /// Bisection tolerance for the window edges.
    double edge_tolerance = 1e-12;
};

/// Envelope [first, last] of {s : |d2t/ds2| >= threshold} on a uniform grid,
/// edges refined by bisection. The set is usually two lobes either side of
/// the gap minimum; the envelope joins them into one window.
SluggishWindow detect_sluggish(const ScheduleModel& model, double epsilon, const SluggishOptions& opts = {});

/// Time spent inside the window; 0 for an empty window.
double sluggish_time(const ScheduleModel& model, const SluggishWindow& w, double epsilon);

}  // namespace als

#pragma once

namespace als {

/// Schedule interval [s_strt, s_stp] where |d2t/ds2| >= threshold.
/// An empty window carries no interval; s_strt == s_stp == 0 then.
struct SluggishWindow {
    double s_strt = 0.0;
    double s_stp = 0.0;
    double threshold = 64.0;
    bool empty = true;

    double width() const { return empty ? 0.0 : s_stp - s_strt; }

    static SluggishWindow none(double threshold) { return {0.0, 0.0, threshold, true}; }
    static SluggishWindow span(double lo, double hi, double threshold) { return {lo, hi, threshold, false}; }
};

}  // namespace als

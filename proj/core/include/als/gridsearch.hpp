#pragma once

#include <vector>

#include "als/window.hpp"

namespace als {

struct GridEvaluation {
    double a = 0.0;
    double b = 0.0;
    double time = 0.0;
};

struct GridResult {
    double best_a = 0.0;
    double best_b = 0.0;
    double best_time = 0.0;
    /// In ascending-a order.
    std::vector<GridEvaluation> evaluations;
};

/// Candidate (a, b) pairs on the quarter unit circle: a = 0, step, 2 step, ..., 1
/// and b = sqrt(1 - a^2). floor(1/step) + 1 entries.
std::vector<GridEvaluation> grid_candidates(double step);

/// Evaluates the sluggish time of adaptive(n, window, grid(a, b)) for every
/// candidate and keeps the fastest (ties go to the smaller a).
/// Throws DomainError on an empty window or step outside (0, 1].
GridResult grid_search(double n, const SluggishWindow& window, double epsilon, double step = 0.1);

}  // namespace als

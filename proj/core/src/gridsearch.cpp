#include "als/gridsearch.hpp"

#include <algorithm>
#include <cmath>

#include "als/error.hpp"
#include "als/models.hpp"
#include "als/sluggish.hpp"

namespace als {

std::vector<GridEvaluation> grid_candidates(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw DomainError("grid_search: step must lie in (0, 1]");
    // small slack so that 1/0.1 style steps land on the endpoint
    const int count = static_cast<int>(std::floor(1.0 / step + 1e-9)) + 1;
    std::vector<GridEvaluation> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double a = std::min(1.0, i * step);
        out.push_back({a, std::sqrt(1.0 - a * a), 0.0});
    }
    return out;
}

GridResult grid_search(double n, const SluggishWindow& window, double epsilon, double step) {
    if (window.empty) throw DomainError("grid_search: sluggish window is empty");
    GridResult result;
    result.evaluations = grid_candidates(step);
    for (GridEvaluation& e : result.evaluations) {
        const ScheduleModel model = adaptive(n, window, AdaptiveCoefficient::grid(e.a, e.b));
        e.time = sluggish_time(model, window, epsilon);
    }
    const auto best = std::min_element(result.evaluations.begin(), result.evaluations.end(),
                                       [](const GridEvaluation& x, const GridEvaluation& y) { return x.time < y.time; });
    result.best_a = best->a;
    result.best_b = best->b;
    result.best_time = best->time;
    return result;
}

}  // namespace als

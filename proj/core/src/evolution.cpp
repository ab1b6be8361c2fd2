#include "als/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "als/error.hpp"

namespace als {

namespace {
constexpr double kStepDoublingTolerance = 1e-4;
}

EvolutionResult evolve_state(const ScheduleModel& model, const State2& initial,
                             const std::function<double(double)>& schedule, double total_time, int steps) {
    if (steps < 1) throw DomainError("evolve: steps must be >= 1");
    if (!(total_time >= 0.0)) throw DomainError("evolve: total time must be non-negative");

    EvolutionResult out;
    out.steps = steps;
    out.total_time = total_time;
    State2 psi = initial;
    if (total_time > 0.0) {
        const double dt = total_time / steps;
        for (int k = 0; k < steps; ++k) {
            const double s = std::clamp(schedule((k + 0.5) * dt), 0.0, 1.0);
            psi = propagator(assemble(model, s), dt) * psi;
            out.max_norm_drift = std::max(out.max_norm_drift, std::abs(psi.norm() - 1.0));
        }
    }
    out.final_state = psi;
    out.fidelity_omega = std::clamp(std::norm(psi.amp_omega), 0.0, 1.0);
    return out;
}

EvolutionResult evolve(const ScheduleModel& model, const TimeMap& tm, int steps) {
    const State2 start = ground_state(assemble(model, 0.0));
    return evolve_state(model, start, [&tm](double t) { return tm.schedule_of_time(t); }, tm.total(), steps);
}

StepCheck check_step_convergence(const ScheduleModel& model, const TimeMap& tm, int steps) {
    StepCheck c;
    c.fidelity = evolve(model, tm, steps).fidelity_omega;
    c.fidelity_doubled = evolve(model, tm, 2 * steps).fidelity_omega;
    c.delta = std::abs(c.fidelity_doubled - c.fidelity);
    c.converged = c.delta <= kStepDoublingTolerance;
    return c;
}

}  // namespace als

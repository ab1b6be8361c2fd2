#pragma once

#include <functional>

#include "als/ham2.hpp"
#include "als/models.hpp"
#include "als/timemap.hpp"

namespace als {

struct EvolutionResult {
    State2 final_state;
    /// |<w|psi(T)>|^2
    double fidelity_omega = 0.0;
    int steps = 0;
    double total_time = 0.0;
    /// max_k | ||psi_k|| - 1 | over the run
    double max_norm_drift = 0.0;
};

/// Piecewise-constant midpoint propagation of `initial` under
/// H(schedule(t)) over [0, total_time] split into `steps` equal slices.
EvolutionResult evolve_state(const ScheduleModel& model, const State2& initial,
                             const std::function<double(double)>& schedule, double total_time, int steps);

/// Evolves the ground state of H(0) along the locally adiabatic schedule of `tm`.
/// Throws DomainError for steps < 1 or a degenerate H(0).
EvolutionResult evolve(const ScheduleModel& model, const TimeMap& tm, int steps);

struct StepCheck {
    double fidelity = 0.0;
    double fidelity_doubled = 0.0;
    double delta = 0.0;
    /// delta <= 1e-4
    bool converged = false;
};

/// Runs evolve at `steps` and `2 * steps`; flags too-coarse step counts.
StepCheck check_step_convergence(const ScheduleModel& model, const TimeMap& tm, int steps);

}  // namespace als

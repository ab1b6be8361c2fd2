#include <gtest/gtest.h>

#include <cmath>

#include "als/error.hpp"
#include "als/evolution.hpp"

using namespace als;

TEST(Evolution, StationaryEigenstate) {
    const ScheduleModel m = baseline(16);
    const State2 omega{Complex(1, 0), Complex(0, 0)};
    const EvolutionResult r = evolve_state(m, omega, [](double) { return 1.0; }, 37.0, 500);
    EXPECT_NEAR(r.fidelity_omega, 1.0, 1e-12);
}

TEST(Evolution, ZeroTimeKeepsState) {
    const State2 psi{Complex(0.6, 0), Complex(0, 0.8)};
    const EvolutionResult r = evolve_state(baseline(16), psi, [](double) { return 0.3; }, 0.0, 10);
    EXPECT_EQ(r.final_state.amp_omega, psi.amp_omega);
    EXPECT_EQ(r.final_state.amp_r, psi.amp_r);
}

TEST(Evolution, RejectsBadSteps) {
    const TimeMap tm(baseline(16), 1.0, 100);
    EXPECT_THROW(evolve(baseline(16), tm, 0), DomainError);
}

TEST(Evolution, AdiabaticContract) {
    for (double eps : {0.05, 0.1}) {
        for (double n : {16.0, 64.0, 256.0}) {
            const ScheduleModel m = baseline(n);
            const TimeMap tm(m, eps);
            const EvolutionResult r = evolve(m, tm, 40000);
            EXPECT_GE(r.fidelity_omega, 1.0 - eps * eps) << n << ' ' << eps;
            EXPECT_LE(r.fidelity_omega, 1.0 + 1e-12);
            EXPECT_LT(r.max_norm_drift, 1e-9);
            EXPECT_NEAR(r.final_state.norm(), 1.0, 1e-9);
        }
    }
}

TEST(Evolution, SecondOrderConvergence) {
    const ScheduleModel m = baseline(16);
    const TimeMap tm(m, 0.5);
    const double ref = evolve(m, tm, 64000).fidelity_omega;
    const double e1 = std::abs(evolve(m, tm, 200).fidelity_omega - ref);
    const double e2 = std::abs(evolve(m, tm, 400).fidelity_omega - ref);
    ASSERT_GT(e1, 0.0);
    EXPECT_GT(e1 / e2, 3.0);
    EXPECT_LT(e1 / e2, 5.0);
}

TEST(Evolution, StepCheckFlagsCoarseGrid) {
    const ScheduleModel m = baseline(64);
    const TimeMap tm(m, 0.1);
    EXPECT_FALSE(check_step_convergence(m, tm, 20).converged);
    const StepCheck fine = check_step_convergence(m, tm, 20000);
    EXPECT_TRUE(fine.converged);
    EXPECT_LT(fine.delta, 1e-4);
}

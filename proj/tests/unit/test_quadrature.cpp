#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "als/error.hpp"
#include "als/quadrature.hpp"

using namespace als;

TEST(Simpson, Polynomials) {
    EXPECT_NEAR(integrate_adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0), 4.0, 1e-13);
    EXPECT_NEAR(integrate_adaptive_simpson([](double) { return 1.0; }, -1.0, 3.0), 4.0, 1e-14);
}

TEST(Simpson, SmoothTranscendental) {
    EXPECT_NEAR(integrate_adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-11);
    EXPECT_NEAR(integrate_adaptive_simpson([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0), std::numbers::pi / 4,
                1e-11);
}

TEST(Simpson, NarrowPeakRelativeAccuracy) {
    const double w = 1e-4;
    auto f = [w](double x) { return 1.0 / ((x - 0.5) * (x - 0.5) + w * w); };
    const double exact = 2.0 * std::atan(0.5 / w) / w;
    EXPECT_NEAR(integrate_adaptive_simpson(f, 0.0, 1.0), exact, 1e-9 * exact);
}

TEST(Simpson, EmptyAndReversed) {
    EXPECT_EQ(integrate_adaptive_simpson([](double x) { return x; }, 0.3, 0.3), 0.0);
    EXPECT_THROW(integrate_adaptive_simpson([](double x) { return x; }, 1.0, 0.0), DomainError);
}

TEST(Simpson, NonFiniteIntegrandThrows) {
    EXPECT_THROW(integrate_adaptive_simpson([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0), DomainError);
}

TEST(Simpson, DepthExhaustionThrows) {
    SimpsonOptions opts;
    opts.max_depth = 3;
    opts.min_depth = 0;
    EXPECT_THROW(integrate_adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, opts), DomainError);
}

TEST(Piecewise, SplitsAtBreakpoints) {
    auto f = [](double x) { return x < 0.3 ? 1.0 : 2.0; };
    const std::vector<double> br{-1.0, 0.3, 5.0};
    EXPECT_NEAR(integrate_piecewise(f, 0.0, 1.0, br), 0.3 + 1.4, 1e-13);
}

TEST(Piecewise, MatchesPlainIntegral) {
    auto f = [](double x) { return std::exp(x); };
    const std::vector<double> br{0.2, 0.5, 0.7};
    EXPECT_NEAR(integrate_piecewise(f, 0.0, 1.0, br), std::numbers::e - 1.0, 1e-12);
}

#pragma once

#include <functional>
#include <span>

namespace als {

struct SimpsonOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 60;
    /// Levels that are always subdivided before the error test may accept.
    int min_depth = 4;
};

/// Adaptive Simpson with Richardson correction. Each panel is accepted once
/// |S(l) + S(r) - S| <= 15 max(abs_tol_local, rel_tol |S(l) + S(r)|).
/// Throws DomainError if the integrand is not finite or the depth cap is hit.
double integrate_adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                                  const SimpsonOptions& opts = {});

/// Integrates panel by panel over sorted breakpoints, each panel adaptively.
/// Breakpoints outside (lo, hi) are ignored.
double integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                           std::span<const double> breakpoints, const SimpsonOptions& opts = {});

}  // namespace als

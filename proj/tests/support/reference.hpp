#pragma once

// Reference formulas written independently of the library's eigen path.

#include <cmath>
#include <random>

#include "als/models.hpp"

namespace als::ref {

/// Squared gap from the endpoint entries and the catalyst coefficients:
/// ((1-s)(a-b) + s(p-q) + 2 fz)^2 + 4((1-s)c + s r + fx)^2 + 4 fy^2, with
/// the catalyst magnitude folded into fx, fy, fz.
inline double gap2_closed_form(const ScheduleModel& m, double s) {
    const Hermitian2& h0 = m.h0();
    const Hermitian2& hf = m.hf();
    const double fx = m.magnitude() * m.fx()(s);
    const double fy = m.magnitude() * m.fy()(s);
    const double fz = m.magnitude() * m.fz()(s);
    const double diag = (1.0 - s) * (h0.a() - h0.b()) + s * (hf.a() - hf.b()) + 2.0 * fz;
    const double off_re = (1.0 - s) * h0.c() + s * hf.c() + fx;
    const double off_im = (1.0 - s) * h0.d() + s * hf.d() + fy;
    return diag * diag + 4.0 * off_re * off_re + 4.0 * off_im * off_im;
}

inline double baseline_gap2(double n, double s) { return 1.0 - 4.0 * ((n - 1.0) / n) * s * (1.0 - s); }

/// A random model drawn from every family, with N = 2^k for k in [1, 30].
inline ScheduleModel random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k_dist(1, 30);
    std::uniform_int_distribution<int> family(0, 6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double n = std::ldexp(1.0, k_dist(rng));
    double lo = u(rng);
    double hi = u(rng);
    if (lo > hi) std::swap(lo, hi);
    if (hi - lo < 1e-3) hi = std::min(1.0, lo + 1e-3);
    const SluggishWindow w = SluggishWindow::span(lo, hi, 64.0);
    const double a = u(rng);
    const double b = std::sqrt(1.0 - a * a);
    const double mag = u(rng) < 0.5 ? 1.0 : catalyst_magnitude(n);
    switch (family(rng)) {
        case 0:
            return baseline(n);
        case 1:
            return ctqw_org(n);
        case 2:
            return m1(n);
        case 3:
            return m2(n);
        case 4:
            return adaptive(n, w, AdaptiveCoefficient::sine(), mag);
        case 5:
            return adaptive(n, w, AdaptiveCoefficient::ss(), mag);
        default:
            return adaptive(n, w, AdaptiveCoefficient::grid(a, b), mag);
    }
}

}  // namespace als::ref

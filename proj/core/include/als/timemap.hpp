#pragma once

// Running time under the local adiabatic condition ds/dt = eps g^2(s):
//
//   t(s) = integral_0^s ds' / (eps g^2(s'))
//
// Closed forms exist for quadratic g^2 and for the Grover baseline; everything
// else goes through adaptive quadrature split at the gap minima.

#include <optional>
#include <vector>

#include "als/models.hpp"

namespace als {

/// g^2(s) = amp (s^2 + lin s + constant), strictly positive on [0, 1].
class QuadraticGap {
public:
    /// Throws DomainError if amp <= 0 or g^2 has a zero in [0, 1].
    QuadraticGap(double amp, double lin, double constant);

    double amp() const { return amp_; }
    double lin() const { return lin_; }
    double constant() const { return constant_; }
    double discriminant() const { return lin_ * lin_ - 4.0 * constant_; }

    double operator()(double s) const { return amp_ * (s * s + lin_ * s + constant_); }
    double derivative(double s) const { return amp_ * (2.0 * s + lin_); }

private:
    double amp_;
    double lin_;
    double constant_;
};

/// Exact g^2 of a catalyst-free model as a quadratic, when it is one with a
/// positive leading coefficient.
std::optional<QuadraticGap> quadratic_gap(const ScheduleModel& model);

/// integral_{s_lo}^{s_hi} ds / (eps g^2) in closed form (log, rational or
/// arctan branch by the sign of the discriminant).
double quad_time(const QuadraticGap& q, double s_lo, double s_hi, double epsilon);

/// Grover local-adiabatic time
/// t(s) = N / (2 eps sqrt(N-1)) [atan(sqrt(N-1)(2s-1)) + atan(sqrt(N-1))].
double grover_time(double n, double s, double epsilon);

/// integral_{s_strt}^{s_stp} ds / (eps g^2) by adaptive quadrature.
/// Throws DomainError when the gap collapses inside the interval.
double total_time(const ScheduleModel& model, double s_strt, double s_stp, double epsilon);

/// dt/ds = 1 / (eps g^2).
double dt_ds(const ScheduleModel& model, double s, double epsilon);

/// d2t/ds2 = -(g^2)'(s) / (eps g^4). Uses the exact derivative for quadratic
/// gaps and a central difference (h = 1e-7, one-sided at the ends) otherwise.
double d2t_ds2(const ScheduleModel& model, double s, double epsilon);

/// Points in (lo, hi) worth splitting quadrature at: refined local minima of
/// g^2 and catalyst window edges. Sorted, unique.
std::vector<double> quadrature_breakpoints(const ScheduleModel& model, double lo, double hi);

/// max_s ||H(s)|| over a uniform 10^4-interval grid.
double max_spectral_norm(const ScheduleModel& model);

/// cost = T * max_s ||H(s)||.
double cost(const ScheduleModel& model, double epsilon);

/// Cached monotone (s, t) table for one model and epsilon, with inversion.
class TimeMap {
public:
    static constexpr int kDefaultIntervals = 10000;

    TimeMap(ScheduleModel model, double epsilon, int intervals = kDefaultIntervals);

    const ScheduleModel& model() const { return model_; }
    double epsilon() const { return epsilon_; }
    double total() const { return t_.back(); }

    /// t(s), 0 at s = 0.
    double time_at(double s) const;

    /// s(t) for 0 <= t <= total(); bisection on the table then safeguarded
    /// Newton on the cell to 1e-12 in s.
    double schedule_of_time(double t) const;

private:
    double cell_integral(double lo, double hi) const;

    ScheduleModel model_;
    double epsilon_;
    std::vector<double> s_;
    std::vector<double> t_;
    std::vector<double> breaks_;
};

double schedule_of_time(const TimeMap& tm, double t);

}  // namespace als

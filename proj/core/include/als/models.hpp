#pragma once

// Time-dependent Hamiltonians H(s) on the (1-s) H0 + catalysts + s Hf template:
//
//   H(s) = (1-s) h0 + s hf + magnitude * (fx(s) X + fy(s) Y + fz(s) Z)
//
// The Y channel only hosts the CTQW catalyst He = M Y; everything else is
// driven through X and Z.

#include <optional>
#include <string>
#include <vector>

#include "als/ham2.hpp"
#include "als/window.hpp"

namespace als {

enum class CoefficientKind { zero, sqrt_s_1ms, half_sin_pi, windowed_sine, windowed_ss, grid_combo };

struct ScheduleInterval {
    double start = 0.0;
    double stop = 1.0;
};

/// Catalyst coefficient f(s) on [0, 1]. Every kind vanishes at s = 0 and s = 1;
/// windowed kinds vanish outside (and on the edges of) their window.
class CoefficientFn {
public:
    static CoefficientFn zero();
    /// sqrt(s(1-s))
    static CoefficientFn sqrt_s_one_minus_s();
    /// sin(s pi) / 2
    static CoefficientFn half_sin_pi();
    /// sin(pi (s - start) / (stop - start)) inside the window.
    static CoefficientFn windowed_sine(ScheduleInterval window);
    /// (s - start)(stop - s) inside the window.
    static CoefficientFn windowed_ss(ScheduleInterval window);
    /// a * sine + b * sine^2 with a, b in [0,1] and a^2 + b^2 = 1 (within 1e-12).
    static CoefficientFn grid_combo(ScheduleInterval window, double a, double b);

    CoefficientKind kind() const { return kind_; }
    const std::optional<ScheduleInterval>& window() const { return window_; }
    double grid_a() const { return a_; }
    double grid_b() const { return b_; }

    /// Throws DomainError for s outside [0, 1].
    double operator()(double s) const;

    bool is_zero() const { return kind_ == CoefficientKind::zero; }

private:
    CoefficientFn(CoefficientKind kind, std::optional<ScheduleInterval> window, double a, double b)
        : kind_(kind), window_(window), a_(a), b_(b) {}

    CoefficientKind kind_ = CoefficientKind::zero;
    std::optional<ScheduleInterval> window_;
    double a_ = 0.0;
    double b_ = 0.0;
};

double coeff_eval(const CoefficientFn& f, double s);

/// Which windowed Z coefficient an adaptive model releases.
struct AdaptiveCoefficient {
    enum class Kind { sine, ss, grid };
    Kind kind = Kind::sine;
    double a = 1.0;
    double b = 0.0;

    static AdaptiveCoefficient sine() { return {Kind::sine, 1.0, 0.0}; }
    static AdaptiveCoefficient ss() { return {Kind::ss, 0.0, 0.0}; }
    static AdaptiveCoefficient grid(double a, double b) { return {Kind::grid, a, b}; }
};

class ScheduleModel {
public:
    /// General constructor. Validates n >= 2, a finite magnitude, and that every
    /// catalyst coefficient vanishes at both schedule endpoints.
    ScheduleModel(std::string name, double n, Hermitian2 h0, Hermitian2 hf, CoefficientFn fx, CoefficientFn fy,
                  CoefficientFn fz, double magnitude);

    const std::string& name() const { return name_; }
    double n() const { return n_; }
    const Hermitian2& h0() const { return h0_; }
    const Hermitian2& hf() const { return hf_; }
    const CoefficientFn& fx() const { return fx_; }
    const CoefficientFn& fy() const { return fy_; }
    const CoefficientFn& fz() const { return fz_; }
    double magnitude() const { return magnitude_; }

    bool catalyst_free() const { return fx_.is_zero() && fy_.is_zero() && fz_.is_zero(); }

    /// Interior schedule points where a coefficient is not smooth (window edges).
    std::vector<double> kinks() const;

private:
    std::string name_;
    double n_;
    Hermitian2 h0_;
    Hermitian2 hf_;
    CoefficientFn fx_;
    CoefficientFn fy_;
    CoefficientFn fz_;
    double magnitude_;
};

Hermitian2 assemble(const ScheduleModel& model, double s);

/// Instantaneous squared gap g^2(s) of the assembled Hamiltonian.
double gap2(const ScheduleModel& model, double s);

/// Grover adiabatic search: (1-s) H0 + s Hf.
ScheduleModel baseline(double n);
/// (1-s) H0 + sqrt(s(1-s)) He + s Hf.
ScheduleModel ctqw_org(double n);
/// (1-s) H0 + sqrt(s(1-s)) M Z + s Hf.
ScheduleModel m1(double n);
/// (1-s) H0 + (sin(s pi)/2) M Z + s Hf.
ScheduleModel m2(double n);

/// Baseline plus a Z catalyst released only inside the window. An empty
/// window yields the baseline model unchanged. `magnitude` defaults to 1;
/// pass catalyst_magnitude(n) to scale the catalyst like m1/m2.
ScheduleModel adaptive(double n, const SluggishWindow& window, AdaptiveCoefficient coeff, double magnitude = 1.0);

}  // namespace als

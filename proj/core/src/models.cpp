#include "als/models.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "als/error.hpp"

namespace als {

namespace {

constexpr double kGridNormTolerance = 1e-12;

ScheduleInterval checked_window(ScheduleInterval w) {
    if (!(w.start >= 0.0 && w.start < w.stop && w.stop <= 1.0)) {
        throw DomainError("catalyst window must satisfy 0 <= start < stop <= 1");
    }
    return w;
}

double windowed_sine_value(const ScheduleInterval& w, double s) {
    return std::sin((s - w.start) * std::numbers::pi / (w.stop - w.start));
}

}  // namespace

CoefficientFn CoefficientFn::zero() { return {CoefficientKind::zero, std::nullopt, 0.0, 0.0}; }

CoefficientFn CoefficientFn::sqrt_s_one_minus_s() { return {CoefficientKind::sqrt_s_1ms, std::nullopt, 0.0, 0.0}; }

CoefficientFn CoefficientFn::half_sin_pi() { return {CoefficientKind::half_sin_pi, std::nullopt, 0.0, 0.0}; }

CoefficientFn CoefficientFn::windowed_sine(ScheduleInterval window) {
    return {CoefficientKind::windowed_sine, checked_window(window), 0.0, 0.0};
}

CoefficientFn CoefficientFn::windowed_ss(ScheduleInterval window) {
    return {CoefficientKind::windowed_ss, checked_window(window), 0.0, 0.0};
}

CoefficientFn CoefficientFn::grid_combo(ScheduleInterval window, double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw DomainError("grid coefficients must lie in [0, 1]");
    }
    if (std::abs(a * a + b * b - 1.0) > kGridNormTolerance) {
        throw DomainError("grid coefficients must satisfy a^2 + b^2 = 1");
    }
    return {CoefficientKind::grid_combo, checked_window(window), a, b};
}

double CoefficientFn::operator()(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("coefficient evaluated outside [0, 1]");
    switch (kind_) {
        case CoefficientKind::zero:
            return 0.0;
        case CoefficientKind::sqrt_s_1ms:
            return std::sqrt(s * (1.0 - s));
        case CoefficientKind::half_sin_pi:
            // sin(pi) is not exactly zero in floating point
            if (s == 0.0 || s == 1.0) return 0.0;
            return 0.5 * std::sin(s * std::numbers::pi);
        case CoefficientKind::windowed_sine:
        case CoefficientKind::windowed_ss:
        case CoefficientKind::grid_combo:
            break;
    }
    const ScheduleInterval& w = *window_;
    if (s <= w.start || s >= w.stop) return 0.0;
    if (kind_ == CoefficientKind::windowed_ss) return (s - w.start) * (w.stop - s);
    const double sine = windowed_sine_value(w, s);
    if (kind_ == CoefficientKind::windowed_sine) return sine;
    return a_ * sine + b_ * sine * sine;
}

double coeff_eval(const CoefficientFn& f, double s) { return f(s); }

ScheduleModel::ScheduleModel(std::string name, double n, Hermitian2 h0, Hermitian2 hf, CoefficientFn fx,
                             CoefficientFn fy, CoefficientFn fz, double magnitude)
    : name_(std::move(name)),
      n_(n),
      h0_(h0),
      hf_(hf),
      fx_(std::move(fx)),
      fy_(std::move(fy)),
      fz_(std::move(fz)),
      magnitude_(magnitude) {
    if (!(n >= 2.0) || !std::isfinite(n)) throw DomainError("ScheduleModel: n must be >= 2");
    if (!std::isfinite(magnitude)) throw DomainError("ScheduleModel: magnitude must be finite");
    for (const CoefficientFn* f : {&fx_, &fy_, &fz_}) {
        if ((*f)(0.0) != 0.0 || (*f)(1.0) != 0.0) {
            throw DomainError("ScheduleModel: catalyst coefficients must vanish at s = 0 and s = 1");
        }
    }
}

std::vector<double> ScheduleModel::kinks() const {
    std::vector<double> out;
    for (const CoefficientFn* f : {&fx_, &fy_, &fz_}) {
        if (!f->window()) continue;
        for (double edge : {f->window()->start, f->window()->stop}) {
            if (edge > 0.0 && edge < 1.0) out.push_back(edge);
        }
    }
    return out;
}

Hermitian2 assemble(const ScheduleModel& model, double s) {
    const double m = model.magnitude();
    const double kx = m * model.fx()(s);
    const double ky = m * model.fy()(s);
    const double kz = m * model.fz()(s);
    const Hermitian2& h0 = model.h0();
    const Hermitian2& hf = model.hf();
    if (s == 0.0) return h0;
    if (s == 1.0) return hf;
    const double r = 1.0 - s;
    return {r * h0.a() + s * hf.a() + kz, r * h0.b() + s * hf.b() - kz, r * h0.c() + s * hf.c() + kx,
            r * h0.d() + s * hf.d() + ky};
}

double gap2(const ScheduleModel& model, double s) { return gap_squared(assemble(model, s)); }

ScheduleModel baseline(double n) {
    return {"baseline",
            n,
            build_h0(n),
            build_hf(),
            CoefficientFn::zero(),
            CoefficientFn::zero(),
            CoefficientFn::zero(),
            1.0};
}

ScheduleModel ctqw_org(double n) {
    // He = M Y, so the Y coefficient carries sqrt(s(1-s)) and the magnitude M.
    return {"org",
            n,
            build_h0(n),
            build_hf(),
            CoefficientFn::zero(),
            CoefficientFn::sqrt_s_one_minus_s(),
            CoefficientFn::zero(),
            catalyst_magnitude(n)};
}

ScheduleModel m1(double n) {
    return {"m1",
            n,
            build_h0(n),
            build_hf(),
            CoefficientFn::zero(),
            CoefficientFn::zero(),
            CoefficientFn::sqrt_s_one_minus_s(),
            catalyst_magnitude(n)};
}

ScheduleModel m2(double n) {
    return {"m2",
            n,
            build_h0(n),
            build_hf(),
            CoefficientFn::zero(),
            CoefficientFn::zero(),
            CoefficientFn::half_sin_pi(),
            catalyst_magnitude(n)};
}

ScheduleModel adaptive(double n, const SluggishWindow& window, AdaptiveCoefficient coeff, double magnitude) {
    if (window.empty || !(window.s_stp > window.s_strt)) return baseline(n);
    const ScheduleInterval w{window.s_strt, window.s_stp};
    std::string name;
    std::optional<CoefficientFn> fz;
    switch (coeff.kind) {
        case AdaptiveCoefficient::Kind::sine:
            name = "adaptive-sine";
            fz = CoefficientFn::windowed_sine(w);
            break;
        case AdaptiveCoefficient::Kind::ss:
            name = "adaptive-ss";
            fz = CoefficientFn::windowed_ss(w);
            break;
        case AdaptiveCoefficient::Kind::grid:
            name = "adaptive-grid";
            fz = CoefficientFn::grid_combo(w, coeff.a, coeff.b);
            break;
    }
    return {std::move(name), n, build_h0(n), build_hf(), CoefficientFn::zero(), CoefficientFn::zero(), *fz, magnitude};
}

}  // namespace als

#include "als/ham2.hpp"

#include <cmath>
#include <string>

#include "als/error.hpp"

namespace als {

namespace {

void require_search_size(double n, const char* who) {
    if (!(n >= 2.0) || !std::isfinite(n)) {
        throw DomainError(std::string(who) + ": search-space size must be >= 2, got " + std::to_string(n));
    }
}

}  // namespace

Hermitian2::Hermitian2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw DomainError("Hermitian2: non-finite entry");
    }
}

Complex Hermitian2::entry(int row, int col) const {
    if (row == 0 && col == 0) return {a_, 0.0};
    if (row == 1 && col == 1) return {b_, 0.0};
    if (row == 0) return {c_, -d_};
    return {c_, d_};
}

Hermitian2 operator+(const Hermitian2& x, const Hermitian2& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

Hermitian2 operator*(double k, const Hermitian2& x) {
    return {k * x.a_, k * x.b_, k * x.c_, k * x.d_};
}

double State2::norm() const {
    return std::sqrt(std::norm(amp_omega) + std::norm(amp_r));
}

Matrix2 Matrix2::identity() {
    Matrix2 u;
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    return u;
}

Matrix2 Matrix2::adjoint() const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
    }
    return r;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    }
    return r;
}

State2 operator*(const Matrix2& u, const State2& psi) {
    return {u(0, 0) * psi.amp_omega + u(0, 1) * psi.amp_r, u(1, 0) * psi.amp_omega + u(1, 1) * psi.amp_r};
}

Hermitian2 identity2() { return {1.0, 1.0, 0.0, 0.0}; }
Hermitian2 sigma_x() { return {0.0, 0.0, 1.0, 0.0}; }
Hermitian2 sigma_y() { return {0.0, 0.0, 0.0, 1.0}; }
Hermitian2 sigma_z() { return {1.0, -1.0, 0.0, 0.0}; }

Hermitian2 build_h0(double n) {
    require_search_size(n, "build_h0");
    const double off = -std::sqrt(n - 1.0) / n;
    return {1.0 - 1.0 / n, 1.0 / n, off, 0.0};
}

Hermitian2 build_hf() { return {0.0, 1.0, 0.0, 0.0}; }

Hermitian2 build_he(double n) {
    return {0.0, 0.0, 0.0, catalyst_magnitude(n)};
}

double catalyst_magnitude(double n) {
    require_search_size(n, "catalyst_magnitude");
    return 2.0 * std::sqrt((n - 1.0) / n);
}

double gap_squared(const Hermitian2& h) {
    const double diff = h.a() - h.b();
    return diff * diff + 4.0 * (h.c() * h.c() + h.d() * h.d());
}

double eigen_gap(const Hermitian2& h) {
    // hypot avoids overflow/underflow of the squared form
    return std::hypot(h.a() - h.b(), 2.0 * std::hypot(h.c(), h.d()));
}

PauliCoeffs pauli_decompose(const Hermitian2& h) {
    return {0.5 * (h.a() + h.b()), h.c(), h.d(), 0.5 * (h.a() - h.b())};
}

Hermitian2 pauli_compose(const PauliCoeffs& k) {
    return {k.k_i + k.k_z, k.k_i - k.k_z, k.k_x, k.k_y};
}

double spectral_norm(const Hermitian2& h) {
    const double center = 0.5 * (h.a() + h.b());
    const double half = 0.5 * eigen_gap(h);
    return std::max(std::abs(center + half), std::abs(center - half));
}

Matrix2 propagator(const Hermitian2& h, double t) {
    const PauliCoeffs k = pauli_decompose(h);
    const double half_gap = 0.5 * eigen_gap(h);
    const double theta = half_gap * t;

    // sin(theta)/half_gap, continuous as the gap closes
    double sinc_t = t;
    if (std::abs(theta) > 1e-8) {
        sinc_t = std::sin(theta) / half_gap;
    } else {
        sinc_t = t * (1.0 - theta * theta / 6.0);
    }
    const double cs = std::cos(theta);
    const Complex phase = std::polar(1.0, -k.k_i * t);
    const Complex minus_i{0.0, -1.0};

    // cos I - i sin (n.sigma) with n.sigma = (k_x X + k_y Y + k_z Z)/half_gap
    Matrix2 u;
    u(0, 0) = phase * (cs + minus_i * sinc_t * k.k_z);
    u(1, 1) = phase * (cs - minus_i * sinc_t * k.k_z);
    u(0, 1) = phase * (minus_i * sinc_t * Complex{k.k_x, -k.k_y});
    u(1, 0) = phase * (minus_i * sinc_t * Complex{k.k_x, k.k_y});
    return u;
}

State2 ground_state(const Hermitian2& h) {
    const double gap = eigen_gap(h);
    if (!(gap > 1e-14)) throw DomainError("ground_state: degenerate spectrum");
    const double lower = 0.5 * (h.a() + h.b()) - 0.5 * gap;
    const Complex z{h.c(), h.d()};  // lower-left element

    // Two null vectors of (H - lower I); keep the better conditioned one.
    State2 v1{std::conj(z), Complex{lower - h.a(), 0.0}};
    State2 v2{Complex{lower - h.b(), 0.0}, z};
    State2 v = v1.norm() >= v2.norm() ? v1 : v2;

    const double nrm = v.norm();
    v.amp_omega /= nrm;
    v.amp_r /= nrm;

    Complex fix{1.0, 0.0};
    if (std::abs(v.amp_omega) > 0.0) {
        fix = std::conj(v.amp_omega) / std::abs(v.amp_omega);
    } else if (std::abs(v.amp_r) > 0.0) {
        fix = std::conj(v.amp_r) / std::abs(v.amp_r);
    }
    v.amp_omega *= fix;
    v.amp_r *= fix;
    // the fixed component is real by construction; drop rounding residue
    if (std::abs(v.amp_omega) > 0.0) {
        v.amp_omega = std::abs(v.amp_omega);
    } else {
        v.amp_r = std::abs(v.amp_r);
    }
    return v;
}

}  // namespace als

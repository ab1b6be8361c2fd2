#pragma once

// Exact 2x2 Hermitian algebra in the ordered {|w>, |r>} basis, where |w> is
// the marked (solution) state and |r> the uniform superposition of the N-1
// unmarked states. Everything the search problem needs lives in this
// two-dimensional invariant subspace, so N only ever enters as a real number.

#include <array>
#include <complex>

namespace als {

using Complex = std::complex<double>;

/// Hermitian operator [[a, c - i d], [c + i d, b]].
///
/// All four fields are finite; construction throws DomainError otherwise.
class Hermitian2 {
public:
    constexpr Hermitian2() = default;
    Hermitian2(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    /// Matrix element (row, col), both in {0, 1}.
    Complex entry(int row, int col) const;

    friend Hermitian2 operator+(const Hermitian2& x, const Hermitian2& y);
    friend Hermitian2 operator*(double k, const Hermitian2& x);
    friend bool operator==(const Hermitian2&, const Hermitian2&) = default;

private:
    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
    double d_ = 0.0;
};

/// Coefficients of h = k_i I + k_x X + k_y Y + k_z Z.
struct PauliCoeffs {
    double k_i = 0.0;
    double k_x = 0.0;
    double k_y = 0.0;
    double k_z = 0.0;
};

/// Two-component state vector; amp_omega is the amplitude on the marked state.
struct State2 {
    Complex amp_omega{};
    Complex amp_r{};

    double norm() const;
};

/// Dense 2x2 complex matrix, row-major. Used for propagators.
struct Matrix2 {
    std::array<Complex, 4> m{};

    Complex& operator()(int row, int col) { return m[static_cast<std::size_t>(2 * row + col)]; }
    Complex operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }

    static Matrix2 identity();
    Matrix2 adjoint() const;
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
    friend State2 operator*(const Matrix2& u, const State2& psi);
};

Hermitian2 identity2();
Hermitian2 sigma_x();
Hermitian2 sigma_y();
Hermitian2 sigma_z();

/// I - |psi0><psi0| with |psi0> = (1/sqrt N)|w> + sqrt((N-1)/N)|r>.
Hermitian2 build_h0(double n);

/// I - |w><w|.
Hermitian2 build_hf();

/// The CTQW-derived catalyst 2i sqrt((N-1)/N)(|r><w| - |w><r|) = M * sigma_y.
Hermitian2 build_he(double n);

/// M = 2 sqrt((N-1)/N); increases monotonically from sqrt(2) towards 2.
double catalyst_magnitude(double n);

double eigen_gap(const Hermitian2& h);

/// Square of eigen_gap without the square root: (a-b)^2 + 4(c^2 + d^2).
double gap_squared(const Hermitian2& h);

PauliCoeffs pauli_decompose(const Hermitian2& h);
Hermitian2 pauli_compose(const PauliCoeffs& k);

/// Largest absolute eigenvalue.
double spectral_norm(const Hermitian2& h);

/// exp(-i h t), including the global phase exp(-i k_i t).
Matrix2 propagator(const Hermitian2& h, double t);

/// Normalized eigenvector of the lower eigenvalue, phase fixed so that
/// amp_omega is real and >= 0 (amp_r real and >= 0 when amp_omega == 0).
/// Throws DomainError when the gap is <= 1e-14.
State2 ground_state(const Hermitian2& h);

}  // namespace als

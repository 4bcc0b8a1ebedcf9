#include "ncwell/diagonalize.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ncwell {

NumericCoefficients numeric_coefficients(const PhysicalParams& p) {
    p.validate();
    const double h = p.hbar, h2 = h * h;
    const double xi = p.theta * p.eta / (4.0 * h2);
    if (xi == 1.0)
        throw std::domain_error(
            "numeric_coefficients: theta eta = 4 hbar^2 makes the map scale diverge");
    NumericCoefficients out;
    out.C = 1.0 / (1.0 - xi);
    const double C2 = out.C * out.C;
    out.C_prime = C2 * (1.0 + p.k * p.m * p.theta * p.theta / (4.0 * h2));
    out.D = p.k * C2 / 2.0 + p.eta * p.eta * C2 / (8.0 * p.m * h2);
    out.E = C2 * (p.eta / (2.0 * p.m * h) - p.k * p.theta / (2.0 * h));
    out.gravity_x = p.m * p.g * C2;
    out.gravity_py = p.m * p.g * C2 * p.theta / (2.0 * h);
    return out;
}

namespace {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// kron(A, B) with x-major state index s = i_x * n + i_y.
Matrix kron(const Matrix& a, const Matrix& b) {
    const long n = a.rows(), m = b.rows();
    Matrix out(n * m, n * m);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k)
            out.block(i * m, k * m, m, m) = a(i, k) * b;
    return out;
}

} // namespace

SpectrumResult diagonalize_oracle(const PhysicalParams& p, int basis_size) {
    p.validate();
    if (!(p.k > 0.0))
        throw std::domain_error("diagonalize_oracle: k must be > 0 (oscillator basis undefined)");
    if (basis_size < 4)
        throw std::invalid_argument("diagonalize_oracle: basis_size must be >= 4 (got "
                                    + std::to_string(basis_size) + ")");

    const NumericCoefficients c = numeric_coefficients(p);
    const double w = p.omega();
    const double hw = p.hbar * w;
    const double lambda = std::sqrt(p.hbar / (p.m * w)); // oscillator length

    // Dimensionless single-mode operators: X = (a + a^+)/sqrt2,
    // P = i(a^+ - a)/sqrt2, so that x = lambda X and p = (hbar/lambda) P.
    const int n = basis_size;
    Matrix x1 = Matrix::Zero(n, n), p1 = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        const double r = std::sqrt((i + 1) / 2.0);
        x1(i, i + 1) = r;
        x1(i + 1, i) = r;
        p1(i, i + 1) = Complex(0.0, -r);
        p1(i + 1, i) = Complex(0.0, r);
    }
    const Matrix id = Matrix::Identity(n, n);

    const Matrix X = kron(x1, id), Y = kron(id, x1);
    const Matrix Px = kron(p1, id), Py = kron(id, p1);

    // H / hbar omega, term by term; each dimensionless prefactor is the SI
    // coefficient times the appropriate power of lambda and hbar.
    const double kin = c.C_prime / 2.0;
    const double conf = c.D / (p.m * w * w);
    const double ang = c.E / w;
    const double grav_x = c.gravity_x * lambda / hw;
    const double grav_py = c.gravity_py * (p.hbar / lambda) / hw;

    Matrix h = kin * (Px * Px + Py * Py) + conf * (X * X + Y * Y)
               + ang * (X * Py - Y * Px) + grav_x * X + grav_py * Py;

    const double scale = h.cwiseAbs().maxCoeff();
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw std::runtime_error(
            "diagonalize_oracle: assembled matrix deviates from Hermiticity by "
            + std::to_string(asym / scale) + " relative (> 1e-12)");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize_oracle: eigensolver failed to converge");

    SpectrumResult out;
    out.method = SpectrumMethod::Diagonalization;
    out.basis_size = basis_size;
    const int n_levels = basis_size;
    out.levels.reserve(static_cast<std::size_t>(n_levels));
    for (int i = 0; i < n_levels; ++i) {
        SpectrumLevel level;
        level.quantum_numbers = {i};
        level.energy_joule = solver.eigenvalues()(i) * hw;
        level.energy_ev = level.energy_joule / codata::electron_volt;
        out.levels.push_back(std::move(level));
    }
    return out;
}

} // namespace ncwell

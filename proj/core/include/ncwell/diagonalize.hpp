#pragma once

#include "ncwell/params.hpp"
#include "ncwell/spectrum.hpp"

namespace ncwell {

/// Numeric values of the transformed-Hamiltonian coefficients for the
/// oscillator-present full-mode form, as printed:
///   C' = C^2 (1 + k m theta^2 / 4 hbar^2)
///   D  = k C^2 / 2 + eta^2 C^2 / 8 m hbar^2
///   E  = C^2 (eta / 2 m hbar - k theta / 2 hbar)
/// plus the linear gravity couplings m g C^2 on x and m g C^2 theta/2hbar
/// on p_y, with C = (1 - theta eta / 4 hbar^2)^{-1}.
struct NumericCoefficients {
    double C = 1.0;
    double C_prime = 1.0;
    double D = 0.0;
    double E = 0.0;
    double gravity_x = 0.0;
    double gravity_py = 0.0;
};

/// Throws std::domain_error when theta eta = 4 hbar^2 (the map scale  C
/// diverges).
NumericCoefficients numeric_coefficients(const PhysicalParams& p);

/// Dense Hermitian diagonalization of
///   H = C'(p_x^2 + p_y^2)/2m + D (x^2 + y^2) + E (x p_y - y p_x)
///       + m g C^2 x + (m g C^2 theta / 2 hbar) p_y
/// in the 2D oscillator product basis (basis_size states per dimension,
/// standard ladder matrix elements), assembled dimensionlessly in units of
/// hbar omega.  Returns the lowest basis_size eigenvalues.  Requires
/// k > 0 and basis_size >= 4; throws std::runtime_error if the assembled
/// matrix deviates from Hermiticity beyond 1e-12 relative.
SpectrumResult diagonalize_oracle(const PhysicalParams& p, int basis_size);

} // namespace ncwell

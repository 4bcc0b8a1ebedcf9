#pragma once

#include "ncwell/params.hpp"

namespace ncwell {

/// Coefficient of the angular-momentum perturbation:
/// eta/2m hbar - m omega^2 theta/2 hbar (omega from k = m omega^2).
double v1_coefficient(const PhysicalParams& p);

/// Momentum-deformation parameter equivalent to a perpendicular magnetic
/// field: m^2 omega^2 theta + 2 q B hbar.
double eta_from_field(const PhysicalParams& p);

/// Oscillation frequency of a charged particle,
/// sqrt(eta/theta - 2 q B hbar/theta)/m.  Throws std::domain_error when
/// theta = 0 (singular configuration) or when the radicand is negative
/// (regime requiring a minimal-length regularization, outside the model).
double omega_charged(const PhysicalParams& p);

/// Neutral-particle limit sqrt(eta/theta)/m; same error conditions.
double omega_neutral(const PhysicalParams& p);

/// Frequency induced purely by the momentum deformation: |eta|/2m hbar.
double omega_grav(const PhysicalParams& p);

/// Momentum deformation recovered from a measured frequency: 2 m hbar omega.
double eta_from_omega(double omega, const PhysicalParams& p);

/// Zero-point energy of the induced oscillation: hbar omega_grav = |eta|/2m.
double gravitational_energy(const PhysicalParams& p);

} // namespace ncwell

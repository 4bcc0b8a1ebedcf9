#pragma once

#include "ncwell/params.hpp"

namespace ncwell {

/// Circular (angular-momentum) quantum numbers of the 2D isotropic
/// oscillator: principal n >= 0 and m_l with |m_l| <= n, n - |m_l| even.
bool valid_circular_state(int n, int m_l);

/// Throws std::invalid_argument naming the offending pair.
void require_circular_state(int n, int m_l);

/// Unperturbed level hbar omega (n + 1); requires k > 0.
double ho_energy(int n, const PhysicalParams& p);

/// <L_z> = hbar m_l in the circular state (n, m_l).
double lz_expectation(int n, int m_l, const PhysicalParams& p);

/// <x p_y> = hbar m_l / 2: half the angular momentum by symmetry.
double xpy_expectation(int n, int m_l, const PhysicalParams& p);

/// <x^2> = hbar (n + 1) / 2 m omega, isotropic across the level.
double x2_expectation(int n, const PhysicalParams& p);

/// <p_x^2> = m hbar omega (n + 1) / 2.
double px2_expectation(int n, const PhysicalParams& p);

} // namespace ncwell

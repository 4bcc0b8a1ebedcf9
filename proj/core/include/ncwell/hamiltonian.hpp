#pragma once

#include "ncwell/bopp.hpp"

#include <memory>
#include <optional>
#include <string>

namespace ncwell {

/// Potential families handled by the builder; kinetic term is always
/// (p_x^2 + p_y^2)/2m.
enum class PotentialKind {
    GravityWell,       ///< V = m g x
    FreeOscillator,    ///< V = k (x^2 + y^2) / 2
    GravityOscillator, ///< V = m g x + k (x^2 + y^2) / 2
};

const char* potential_kind_name(PotentialKind k);
PotentialKind potential_kind_from_name(const std::string& name);

/// Builds the Hamiltonian of the chosen potential over the auxiliary
/// canonical algebra (its variables are the primed, commutative ones).
WeylElement build_hamiltonian(PotentialKind kind);

/// Structured decomposition of a quadratic-plus-linear Hamiltonian into the
/// named term shapes the derivations track.  `collect` never rejects an
/// element: whatever does not fit a named shape stays in `residual`.
struct HamiltonianForm {
    WeylElement raw; ///< full normal-ordered element

    ScalarCoefficient kinetic_x;        ///< coefficient of p_x^2
    ScalarCoefficient kinetic_y;        ///< coefficient of p_y^2
    ScalarCoefficient confinement;      ///< shared coefficient of x^2 and y^2
    ScalarCoefficient angular_momentum; ///< coefficient of (x p_y - y p_x)
    ScalarCoefficient gravity_linear;   ///< coefficient of x
    ScalarCoefficient gravity_momentum; ///< coefficient of p_y
    ScalarCoefficient constant;         ///< scalar term (kept, excluded from conformance)
    WeylElement residual;               ///< everything else, normal-ordered

    // Provenance, filled in by the pipeline steps that produce the form.
    std::optional<MapMode> mode;                          ///< set by transform_hamiltonian
    ScalarCoefficient map_scale = ScalarCoefficient(1);   ///< the map's C factor
    std::shared_ptr<const HamiltonianForm> shift_source;  ///< pre-shift form, if shifted
    ScalarCoefficient shift_scale_x = ScalarCoefficient(1); ///< pbar_x = scale_x * p_x
    ScalarCoefficient shift_scale_y = ScalarCoefficient(1); ///< pbar_y = scale_y * p_y + offset
    ScalarCoefficient shift_offset_y = ScalarCoefficient(0);

    bool residual_empty() const { return residual.is_zero(); }
    /// Re-assembles the bucket decomposition; equals `raw` by construction.
    WeylElement reconstruct() const;
};

/// Splits a normal-ordered element into the named buckets.  Paired shapes
/// (x^2 with y^2, x p_y with -y p_x) fall into their bucket only when the
/// pairing is exact; otherwise both halves stay in the residual.
HamiltonianForm collect(const WeylElement& e);

/// Rewrites `h` through `map` and collects the result.  Throws when terms
/// fall outside the tracked shapes (nonzero residual), naming the offender.
/// Pre: h lives over map.source; map is an AuxToNC-direction map.
HamiltonianForm transform_hamiltonian(const WeylElement& h, const BoppMap& map);

/// Which momentum redefinition to apply to a transformed form.  Both absorb
/// the linear p_y term exactly; they differ in the scale factor.
enum class ShiftKind {
    Eq10, ///< pbar = C p + offset: restores the 1/2m kinetic coefficient of the gravity pipeline
    Eq17, ///< pbar = (2m K) p + offset, K the form's own kinetic coefficient
};

/// Applies the momentum redefinition, re-collects, and records the shift in
/// the result's provenance.  The offset is (coefficient of p_y) * scale /
/// (2 * coefficient of p_y^2), which absorbs the linear term exactly; this
/// function asserts that it did.
HamiltonianForm momentum_shift(const HamiltonianForm& hf, ShiftKind kind);

/// Undoes a momentum_shift using the recorded scale and offset; the result
/// reproduces the pre-shift form exactly (raw element and buckets).
HamiltonianForm momentum_shift_inverse(const HamiltonianForm& hf);

/// For a form produced by momentum_shift from a gravity-carrying pipeline:
/// returns the post-shift linear-in-x coefficient after asserting that the
/// map factor cancels, i.e. that it equals exactly m*g.
ScalarCoefficient gravity_collapse_check(const HamiltonianForm& shifted);

/// The shorthand coefficient set of the fully transformed oscillator form:
/// C' on p^2/2m, D on (x^2 + y^2), E on (x p_y - y p_x), plus the two
/// gravity coefficients.
struct CoefficientReport {
    ScalarCoefficient C_prime;          ///< 2m * kinetic coefficient
    ScalarCoefficient D;                ///< confinement coefficient
    ScalarCoefficient E;                ///< angular-momentum coefficient
    ScalarCoefficient gravity_linear;   ///< coefficient of x
    ScalarCoefficient gravity_momentum; ///< coefficient of p_y
};

/// Extracts the shorthand coefficients from a collected form.
/// Pre: isotropic kinetic term (kinetic_x == kinetic_y).
CoefficientReport coefficient_report(const HamiltonianForm& hf);

} // namespace ncwell

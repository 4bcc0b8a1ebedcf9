#pragma once

#include "ncwell/weyl.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace ncwell {

/// Which deformation parameters a map carries.  SpaceOnly zeroes every
/// eta-dependent shift (and its C factor becomes 1), MomentumOnly zeroes
/// the theta-dependent shifts, Commutative is the identity map.
enum class MapMode { Full, SpaceOnly, MomentumOnly, Commutative };

const char* map_mode_name(MapMode m);
MapMode map_mode_from_name(const std::string& name);

/// Direction of the linear phase-space substitution.  NCtoAux writes the
/// deformed (noncommutative) generators as combinations of auxiliary
/// canonical ones; AuxToNC is its exact inverse.
enum class MapDirection { NCtoAux, AuxToNC };

/// Linear generator substitution between the deformed and the auxiliary
/// canonical algebra, applied coefficient-wise to normal-ordered elements.
struct BoppMap {
    MapMode mode;
    MapDirection direction;
    std::shared_ptr<const AlgebraSpec> source;
    std::shared_ptr<const AlgebraSpec> target;
    std::array<WeylElement, kGenCount> images; ///< image of each source generator
    ScalarCoefficient scale;                   ///< the (1 - theta*eta/4hbar^2)^-1 factor; 1 for NCtoAux

    /// x -> x' - (theta/2hbar) p'_y,  y -> y' + (theta/2hbar) p'_x,
    /// p_x -> p'_x + (eta/2hbar) y',  p_y -> p'_y - (eta/2hbar) x'.
    static BoppMap nc_to_aux(MapMode mode);
    /// Exact inverse of the above:
    /// x' -> C (x + (theta/2hbar) p_y),  y' -> C (y - (theta/2hbar) p_x),
    /// p'_x -> C (p_x - (eta/2hbar) y), p'_y -> C (p_y + (eta/2hbar) x),
    /// with C = (1 - theta*eta/4hbar^2)^-1.
    static BoppMap aux_to_nc(MapMode mode);

    /// Effective deformation scales after mode masking (zero when masked).
    ScalarCoefficient theta_scale() const;
    ScalarCoefficient eta_scale() const;
};

/// Applies the map as an algebra homomorphism on normal forms: each source
/// generator is replaced by its image and the result is renormal-ordered in
/// the target algebra.  Pre: `e` lives over `map.source`.
WeylElement apply_map(const BoppMap& map, const WeylElement& e);

/// The commutator [image(x), image(p_x)] evaluated in the target algebra.
/// For the full NCtoAux map this is i*hbar*(1 + theta*eta/4hbar^2), the
/// source of the effective Planck constant.  Pre: map is NCtoAux.
WeylElement verify_effective_commutator(const BoppMap& map);

/// All six generator-pair commutators of the mapped generators, evaluated
/// in the target algebra, for pairs (a, b) with a < b.
struct CommutatorCheck {
    Gen a, b;
    WeylElement value;
};
std::vector<CommutatorCheck> image_commutators(const BoppMap& map);

/// Variants of the effective Planck constant.
enum class PlanckVariant { Simple, General };

const char* planck_variant_name(PlanckVariant v);
PlanckVariant planck_variant_from_name(const std::string& name);

struct EffectivePlanck {
    PlanckVariant variant;
    ScalarCoefficient xi;       ///< fractional correction
    ScalarCoefficient hbar_eff; ///< hbar * (1 + xi)
};

/// Simple: xi = theta*eta/4hbar^2 (from the canonical-pair commutator of
/// the mapped generators).  General: xi = m*k*theta^2/8hbar^2 -
/// eta*theta/4hbar^2 (order-2 expansion of the combined kinetic scale).
/// The arguments may be any scalar expressions standing for the parameters.
EffectivePlanck effective_planck(const ScalarCoefficient& theta, const ScalarCoefficient& eta,
                                 const ScalarCoefficient& m, const ScalarCoefficient& k,
                                 PlanckVariant variant);

/// Expands (1 - eta*theta/4hbar^2) * sqrt(1 + k*m*theta^2/4hbar^2) in the
/// joint (theta, eta) grading, truncated after `max_order`.  At order 2 the
/// result is 1 + m*k*theta^2/8hbar^2 - eta*theta/4hbar^2.
ScalarCoefficient expand_C_series(const ScalarCoefficient& k, const ScalarCoefficient& m,
                                  const ScalarCoefficient& theta, const ScalarCoefficient& eta,
                                  int max_order);

/// True when a - b vanishes through the given joint order in (theta, eta),
/// i.e. every surviving term of the difference has total deformation degree
/// at least order + 1.
bool equal_to_deformation_order(const ScalarCoefficient& a, const ScalarCoefficient& b, int order);

/// Formal grading symbol used for deformation-order bookkeeping
/// (registered on first use; dimensionless).
SymbolId grading_symbol();

} // namespace ncwell

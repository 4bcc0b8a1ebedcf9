#pragma once

#include "ncwell/bopp.hpp"
#include "ncwell/params.hpp"

#include <optional>
#include <vector>

namespace ncwell {

enum class SpectrumMethod { AiryExact, WKB, Diagonalization, Perturbation };

const char* spectrum_method_name(SpectrumMethod m);

struct SpectrumLevel {
    std::vector<int> quantum_numbers;
    double energy_joule = 0.0;
    double energy_ev = 0.0;
};

struct SpectrumResult {
    std::vector<SpectrumLevel> levels;
    SpectrumMethod method = SpectrumMethod::AiryExact;
    int basis_size = 0; ///< per-dimension basis size when applicable, else 0
};

/// Numeric value of the deformation parameter xi for the chosen variant:
/// theta eta / 4 hbar^2, or m k theta^2 / 8 hbar^2 - eta theta / 4 hbar^2
/// with the oscillator correction.
double xi_value(const PhysicalParams& p, PlanckVariant variant);

/// hbar (1 + xi): the rescaled action constant entering the deformed
/// mixed commutator.
double hbar_eff_value(const PhysicalParams& p, PlanckVariant variant);

/// Levels E_n = (hbar^2 m g^2 / 2)^{1/3} alpha_n of the well for
/// n = 1..n_max.  Throws std::domain_error when g = 0 (no bound states)
/// and std::invalid_argument for n_max < 1 or invalid parameters.
SpectrumResult gravity_well_spectrum(const PhysicalParams& p, int n_max);

/// Same levels with the semiclassical zeta_n in place of alpha_n.
SpectrumResult gravity_well_spectrum_wkb(const PhysicalParams& p, int n_max);

/// Bound on the deformation inferred from a fractional level agreement
/// delta: since E_n scales as hbar^{2/3}, |xi| <= (3/2) delta; the Simple
/// variant additionally bounds |theta eta| = 4 hbar^2 |xi|.
struct NCBound {
    PlanckVariant variant = PlanckVariant::Simple;
    double delta = 0.0;
    double xi_bound = 0.0;
    std::optional<double> theta_eta_bound; ///< set for the Simple variant
};

NCBound nc_bound_from_measurement(double delta_E_over_E, PlanckVariant variant,
                                  const PhysicalParams& p);

} // namespace ncwell

#include "ncwell/spectrum.hpp"

#include "ncwell/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncwell {

const char* spectrum_method_name(SpectrumMethod m) {
    switch (m) {
    case SpectrumMethod::AiryExact: return "airy-exact";
    case SpectrumMethod::WKB: return "wkb";
    case SpectrumMethod::Diagonalization: return "diagonalization";
    case SpectrumMethod::Perturbation: return "perturbation";
    }
    return "?";
}

double xi_value(const PhysicalParams& p, PlanckVariant variant) {
    const double h2 = p.hbar * p.hbar;
    if (variant == PlanckVariant::Simple) return p.theta * p.eta / (4.0 * h2);
    return p.m * p.k * p.theta * p.theta / (8.0 * h2) - p.eta * p.theta / (4.0 * h2);
}

double hbar_eff_value(const PhysicalParams& p, PlanckVariant variant) {
    return p.hbar * (1.0 + xi_value(p, variant));
}

namespace {

SpectrumResult well_levels(const PhysicalParams& p, int n_max, SpectrumMethod method) {
    p.validate();
    if (!(p.g > 0.0))
        throw std::domain_error("gravity_well_spectrum: g must be > 0 (no bound states)");
    if (n_max < 1)
        throw std::invalid_argument("gravity_well_spectrum: n_max must be >= 1 (got "
                                    + std::to_string(n_max) + ")");
    const double scale = std::cbrt(p.hbar * p.hbar * p.m * p.g * p.g / 2.0);
    SpectrumResult out;
    out.method = method;
    out.levels.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double a = method == SpectrumMethod::WKB ? wkb_level(n) : airy_zero(n);
        SpectrumLevel level;
        level.quantum_numbers = {n};
        level.energy_joule = scale * a;
        level.energy_ev = level.energy_joule / codata::electron_volt;
        out.levels.push_back(std::move(level));
    }
    return out;
}

} // namespace

SpectrumResult gravity_well_spectrum(const PhysicalParams& p, int n_max) {
    return well_levels(p, n_max, SpectrumMethod::AiryExact);
}

SpectrumResult gravity_well_spectrum_wkb(const PhysicalParams& p, int n_max) {
    return well_levels(p, n_max, SpectrumMethod::WKB);
}

NCBound nc_bound_from_measurement(double delta_E_over_E, PlanckVariant variant,
                                  const PhysicalParams& p) {
    if (!(delta_E_over_E > 0.0))
        throw std::invalid_argument(
            "nc_bound_from_measurement: fractional level agreement must be > 0");
    p.validate();
    NCBound out;
    out.variant = variant;
    out.delta = delta_E_over_E;
    out.xi_bound = 1.5 * delta_E_over_E;
    if (variant == PlanckVariant::Simple)
        out.theta_eta_bound = 4.0 * p.hbar * p.hbar * out.xi_bound;
    return out;
}

} // namespace ncwell

#include "ncwell/frequencies.hpp"

#include <cmath>
#include <stdexcept>

namespace ncwell {

double v1_coefficient(const PhysicalParams& p) {
    p.validate();
    const double w2 = p.k / p.m; // omega^2
    return p.eta / (2.0 * p.m * p.hbar) - p.m * w2 * p.theta / (2.0 * p.hbar);
}

double eta_from_field(const PhysicalParams& p) {
    p.validate();
    const double w2 = p.k / p.m;
    return p.m * p.m * w2 * p.theta + 2.0 * p.q * p.B * p.hbar;
}

namespace {

double frequency_from_radicand(const char* op, double radicand, double m) {
    if (radicand < 0.0)
        throw std::domain_error(
            std::string(op)
            + ": negative radicand; this parameter regime requires a minimal-length "
              "regularization and lies outside the model");
    return std::sqrt(radicand) / m;
}

} // namespace

double omega_charged(const PhysicalParams& p) {
    p.validate();
    if (p.theta == 0.0)
        throw std::domain_error("omega_charged: singular configuration (theta = 0)");
    return frequency_from_radicand("omega_charged",
                                   p.eta / p.theta - 2.0 * p.q * p.B * p.hbar / p.theta, p.m);
}

double omega_neutral(const PhysicalParams& p) {
    p.validate();
    if (p.theta == 0.0)
        throw std::domain_error("omega_neutral: singular configuration (theta = 0)");
    return frequency_from_radicand("omega_neutral", p.eta / p.theta, p.m);
}

double omega_grav(const PhysicalParams& p) {
    p.validate();
    return std::fabs(p.eta) / (2.0 * p.m * p.hbar);
}

double eta_from_omega(double omega, const PhysicalParams& p) {
    p.validate();
    return 2.0 * p.m * p.hbar * omega;
}

double gravitational_energy(const PhysicalParams& p) {
    return p.hbar * omega_grav(p);
}

} // namespace ncwell

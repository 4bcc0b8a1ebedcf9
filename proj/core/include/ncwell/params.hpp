#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncwell {

/// CODATA 2018 values (SI).
namespace codata {
inline constexpr double hbar = 1.054571817e-34;          ///< J s
inline constexpr double electron_volt = 1.602176634e-19; ///< J
inline constexpr double elementary_charge = 1.602176634e-19; ///< C
inline constexpr double neutron_mass = 1.67492749804e-27;    ///< kg
inline constexpr double electron_mass = 9.1093837015e-31;    ///< kg
inline constexpr double standard_gravity = 9.80665;          ///< m/s^2
} // namespace codata

/// Numeric inputs of the model, all SI: mass (kg), gravitational
/// acceleration (m/s^2), action (J s), deformation parameters theta (m^2)
/// and eta (kg^2 m^2 / s^2), spring constant (N/m), charge (C), and
/// magnetic field (T).  The oscillator frequency is tied to the spring
/// constant by k = m omega^2.
struct PhysicalParams {
    double m = codata::neutron_mass;
    double g = codata::standard_gravity;
    double hbar = codata::hbar;
    double theta = 0.0;
    double eta = 0.0;
    double k = 0.0;
    double q = 0.0;
    double B = 0.0;

    double omega() const { return std::sqrt(k / m); }
    void set_omega(double w) { k = m * w * w; }

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const {
        auto fail = [](const std::string& what) {
            throw std::invalid_argument("physical parameters: " + what);
        };
        if (!(m > 0.0)) fail("m must be > 0 (got " + std::to_string(m) + ")");
        if (!(hbar > 0.0)) fail("hbar must be > 0 (got " + std::to_string(hbar) + ")");
        if (!(g >= 0.0)) fail("g must be >= 0 (got " + std::to_string(g) + ")");
        if (!(k >= 0.0)) fail("k must be >= 0 (got " + std::to_string(k) + ")");
        if (!std::isfinite(theta)) fail("theta must be finite");
        if (!std::isfinite(eta)) fail("eta must be finite");
        if (!std::isfinite(q)) fail("q must be finite");
        if (!std::isfinite(B)) fail("B must be finite");
    }
};

} // namespace ncwell

#include "doctest.h"

#include <ncwell/airy.hpp>
#include <ncwell/diagonalize.hpp>
#include <ncwell/frequencies.hpp>
#include <ncwell/oscillator.hpp>
#include <ncwell/params.hpp>
#include <ncwell/perturbation.hpp>
#include <ncwell/spectrum.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ncwell;

namespace {

const double kPi = std::acos(-1.0);

// First zeros of Ai(-z), to full double precision.
const double kAiryZeros[5] = {2.33810741045977, 4.08794944413097, 5.52055982809555,
                              6.78670809007176, 7.94413358712085};

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

PhysicalParams unit_oscillator(double eta) {
    PhysicalParams p;
    p.m = 1.0;
    p.hbar = 1.0;
    p.g = 0.0;
    p.k = 1.0;
    p.theta = 0.0;
    p.eta = eta;
    return p;
}

} // namespace

TEST_SUITE("airy") {
    TEST_CASE("value_at_zero") {
        // Ai(0) = 3^{-2/3} / Gamma(2/3)
        CHECK(airy_ai(0.0) == doctest::Approx(0.3550280538878172).epsilon(1e-13));
    }

    TEST_CASE("first_zeros_match_reference_values") {
        for (int n = 1; n <= 5; ++n)
            CHECK(std::abs(airy_zero(n) - kAiryZeros[n - 1]) < 1e-10);
    }

    TEST_CASE("zeros_are_roots_and_increase") {
        double prev = 0.0;
        for (int n = 1; n <= 20; ++n) {
            double z = airy_zero(n);
            CHECK(z > prev);
            CHECK(std::abs(airy_ai(-z)) < 1e-10);
            prev = z;
        }
        CHECK(airy_zero(20) == doctest::Approx(20.5373329077).epsilon(1e-9));
    }

    TEST_CASE("decay_on_the_positive_side") {
        CHECK(airy_ai(2.0) < airy_ai(1.0));
        CHECK(airy_ai(8.0) < 1e-6);
        CHECK(airy_ai(8.0) > 0.0);
        // Values straddling the evaluation switchover stay smooth: the first
        // difference is bounded by the derivative (|Ai'| ~ sqrt(z) Ai), and
        // the second difference would expose any jump between the branches.
        double a = airy_ai(8.2499);
        double m = airy_ai(8.2500);
        double b = airy_ai(8.2501);
        CHECK(std::abs(a - b) < 1e-3 * std::abs(a));
        // The branches are cross-validated to ~1e-12 absolute where they
        // meet, so the jump detector uses that as its noise floor.
        CHECK(std::abs(a - 2.0 * m + b) < 2e-12);
    }

    TEST_CASE("semiclassical_levels_track_the_zeros") {
        // zeta_n = [3 pi/2 (n - 1/4)]^{2/3}; worst at n = 1 (~0.77%), under
        // 1% everywhere, improving monotonically.
        double t1 = 1.5 * kPi * 0.75;
        CHECK(wkb_level(1) == doctest::Approx(std::cbrt(t1 * t1)).epsilon(1e-14));
        double prev_err = 1.0;
        for (int n = 1; n <= 20; ++n) {
            double err = rel_err(wkb_level(n), airy_zero(n));
            CHECK(err < 0.01);
            CHECK(err < prev_err);
            prev_err = err;
        }
        CHECK(rel_err(wkb_level(1), airy_zero(1)) == doctest::Approx(0.0077).epsilon(0.05));
    }

    TEST_CASE("invalid_indices_throw") {
        CHECK_THROWS_AS(airy_zero(0), std::invalid_argument);
        CHECK_THROWS_AS(wkb_level(0), std::invalid_argument);
        CHECK_THROWS_AS(airy_zero(-3), std::invalid_argument);
    }
}

TEST_SUITE("gravity_well_spectrum") {
    TEST_CASE("neutron_ground_level") {
        PhysicalParams p;  // CODATA neutron defaults
        auto s = gravity_well_spectrum(p, 5);
        REQUIRE(s.levels.size() == 5);
        CHECK(s.method == SpectrumMethod::AiryExact);
        // E_1 = 1.407 peV within one-thousandth of a peV.
        double e1_pev = s.levels[0].energy_ev * 1e12;
        CHECK(std::abs(e1_pev - 1.407) < 0.001);
        // Scale check against the closed form.
        double scale = std::cbrt(p.hbar * p.hbar * p.m * p.g * p.g / 2.0);
        CHECK(s.levels[0].energy_joule ==
              doctest::Approx(scale * airy_zero(1)).epsilon(1e-14));
        CHECK(s.levels[0].quantum_numbers == std::vector<int>{1});
        for (int i = 1; i < 5; ++i)
            CHECK(s.levels[i].energy_joule > s.levels[i - 1].energy_joule);
    }

    TEST_CASE("wkb_variant_underestimates_slightly") {
        PhysicalParams p;
        auto exact = gravity_well_spectrum(p, 8);
        auto wkb = gravity_well_spectrum_wkb(p, 8);
        CHECK(wkb.method == SpectrumMethod::WKB);
        for (int i = 0; i < 8; ++i) {
            CHECK(wkb.levels[i].energy_joule < exact.levels[i].energy_joule);
            CHECK(rel_err(wkb.levels[i].energy_joule, exact.levels[i].energy_joule) < 0.01);
        }
    }

    TEST_CASE("levels_scale_as_hbar_to_the_two_thirds") {
        PhysicalParams p;
        const double xi = 1e-6;
        PhysicalParams shifted = p;
        shifted.hbar = p.hbar * (1.0 + xi);
        auto base = gravity_well_spectrum(p, 5);
        auto bumped = gravity_well_spectrum(shifted, 5);
        double expected = std::pow(1.0 + xi, 2.0 / 3.0);
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(bumped.levels[i].energy_joule / base.levels[i].energy_joule -
                           expected) < 1e-10);
    }

    TEST_CASE("deformation_values") {
        PhysicalParams p;
        p.theta = 2.0e-40;
        p.eta = 3.0e-55;
        p.k = 0.5;
        double h2 = p.hbar * p.hbar;
        CHECK(xi_value(p, PlanckVariant::Simple) ==
              doctest::Approx(p.theta * p.eta / (4.0 * h2)).epsilon(1e-14));
        CHECK(xi_value(p, PlanckVariant::General) ==
              doctest::Approx(p.m * p.k * p.theta * p.theta / (8.0 * h2) -
                              p.eta * p.theta / (4.0 * h2))
                  .epsilon(1e-14));
        CHECK(hbar_eff_value(p, PlanckVariant::Simple) ==
              doctest::Approx(p.hbar * (1.0 + xi_value(p, PlanckVariant::Simple))));
    }

    TEST_CASE("error_paths") {
        PhysicalParams p;
        p.g = 0.0;
        CHECK_THROWS_AS(gravity_well_spectrum(p, 3), std::domain_error);
        PhysicalParams ok;
        CHECK_THROWS_AS(gravity_well_spectrum(ok, 0), std::invalid_argument);
        PhysicalParams bad;
        bad.m = -1.0;
        CHECK_THROWS_AS(gravity_well_spectrum(bad, 3), std::invalid_argument);
    }
}

TEST_SUITE("deformation_bounds") {
    TEST_CASE("bound_values") {
        PhysicalParams p;
        auto b = nc_bound_from_measurement(6.6e-3, PlanckVariant::Simple, p);
        CHECK(b.xi_bound == doctest::Approx(9.9e-3).epsilon(1e-12));
        REQUIRE(b.theta_eta_bound.has_value());
        CHECK(*b.theta_eta_bound ==
              doctest::Approx(4.0 * p.hbar * p.hbar * 9.9e-3).epsilon(1e-12));
        auto general = nc_bound_from_measurement(6.6e-3, PlanckVariant::General, p);
        CHECK_FALSE(general.theta_eta_bound.has_value());
        CHECK(general.xi_bound == doctest::Approx(9.9e-3).epsilon(1e-12));
    }

    TEST_CASE("bound_is_consistent_with_the_spectrum_shift") {
        // A deformation exactly at the inferred bound moves the levels by no
        // more than (fractionally more than) the measured discrepancy.
        PhysicalParams p;
        const double delta = 1e-2;
        auto b = nc_bound_from_measurement(delta, PlanckVariant::Simple, p);
        PhysicalParams shifted = p;
        shifted.hbar = p.hbar * (1.0 + b.xi_bound);
        auto base = gravity_well_spectrum(p, 3);
        auto moved = gravity_well_spectrum(shifted, 3);
        double frac = rel_err(moved.levels[0].energy_joule, base.levels[0].energy_joule);
        CHECK(frac <= delta * 1.001);
        CHECK(frac >= delta * 0.9);
    }

    TEST_CASE("nonpositive_delta_throws") {
        PhysicalParams p;
        CHECK_THROWS_AS(nc_bound_from_measurement(0.0, PlanckVariant::Simple, p),
                        std::invalid_argument);
        CHECK_THROWS_AS(nc_bound_from_measurement(-1e-3, PlanckVariant::Simple, p),
                        std::invalid_argument);
    }
}

TEST_SUITE("induced_frequencies") {
    TEST_CASE("neutral_particle_frequency") {
        PhysicalParams p;
        p.m = 2.0;
        p.theta = 1.0;
        p.eta = 4.0;
        p.q = 0.0;
        CHECK(omega_neutral(p) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(omega_charged(p) == doctest::Approx(1.0).epsilon(1e-14));  // q B = 0
    }

    TEST_CASE("charged_particle_frequency_and_field_equivalence") {
        PhysicalParams p;
        p.m = 2.0;
        p.hbar = 2.0;
        p.theta = 1.0;
        p.eta = 4.0;
        p.q = 1.0;
        p.B = 0.5;
        // sqrt(eta/theta - 2 q B hbar/theta)/m = sqrt(4 - 2)/2
        CHECK(omega_charged(p) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
        // eta reconstructed from the magnetic equivalence: m^2 w^2 theta + 2 q B hbar.
        PhysicalParams f = p;
        f.set_omega(omega_charged(p));
        CHECK(eta_from_field(f) == doctest::Approx(p.eta).epsilon(1e-12));
    }

    TEST_CASE("momentum_deformation_round_trips") {
        PhysicalParams p;
        p.m = 3.0;
        p.hbar = 0.5;
        p.eta = 7.0;
        double w = omega_grav(p);
        CHECK(w == doctest::Approx(p.eta / (2.0 * p.m * p.hbar)).epsilon(1e-14));
        CHECK(eta_from_omega(w, p) == doctest::Approx(p.eta).epsilon(1e-14));
        CHECK(gravitational_energy(p) == doctest::Approx(p.hbar * w).epsilon(1e-14));
        p.eta = -7.0;  // the induced frequency depends on |eta|
        CHECK(omega_grav(p) == doctest::Approx(w).epsilon(1e-14));
    }

    TEST_CASE("angular_coefficient") {
        PhysicalParams p;
        p.m = 2.0;
        p.hbar = 1.0;
        p.eta = 4.0;
        p.theta = 1.0;
        p.k = 0.0;
        CHECK(v1_coefficient(p) == doctest::Approx(1.0).epsilon(1e-14));
        p.k = 2.0;  // m w^2 = k: subtracts k theta / 2 hbar = 1
        CHECK(v1_coefficient(p) == doctest::Approx(0.0).epsilon(1e-14));
    }

    TEST_CASE("singular_configurations_throw") {
        PhysicalParams p;
        p.theta = 0.0;
        p.eta = 1.0;
        CHECK_THROWS_AS(omega_neutral(p), std::domain_error);
        PhysicalParams neg;
        neg.hbar = 1.0;
        neg.theta = 1.0;
        neg.eta = 1.0;
        neg.q = 1.0;
        neg.B = 1.0;  // 2 q B hbar > eta drives the radicand negative
        CHECK_THROWS_AS(omega_charged(neg), std::domain_error);
    }
}

TEST_SUITE("oscillator_states") {
    TEST_CASE("circular_state_validity") {
        CHECK(valid_circular_state(0, 0));
        CHECK(valid_circular_state(1, 1));
        CHECK(valid_circular_state(1, -1));
        CHECK(valid_circular_state(2, 0));
        CHECK(valid_circular_state(2, 2));
        CHECK(valid_circular_state(3, -3));
        CHECK(valid_circular_state(3, 1));
        CHECK_FALSE(valid_circular_state(1, 0));
        CHECK_FALSE(valid_circular_state(2, 1));
        CHECK_FALSE(valid_circular_state(0, 1));
        CHECK_FALSE(valid_circular_state(-1, 0));
        CHECK_FALSE(valid_circular_state(2, -3));
        CHECK_THROWS_AS(require_circular_state(1, 0), std::invalid_argument);
    }

    TEST_CASE("expectation_values") {
        auto p = unit_oscillator(0.0);  // omega = 1
        CHECK(ho_energy(0, p) == doctest::Approx(1.0));
        CHECK(ho_energy(3, p) == doctest::Approx(4.0));
        CHECK(lz_expectation(2, -2, p) == doctest::Approx(-2.0));
        CHECK(xpy_expectation(2, 2, p) == doctest::Approx(1.0));
        CHECK(x2_expectation(0, p) == doctest::Approx(0.5));
        CHECK(px2_expectation(0, p) == doctest::Approx(0.5));
        CHECK(x2_expectation(3, p) == doctest::Approx(2.0));
    }

    TEST_CASE("missing_oscillator_is_rejected") {
        PhysicalParams p;
        p.k = 0.0;
        CHECK_THROWS_AS(ho_energy(0, p), std::domain_error);
        CHECK_THROWS_AS(x2_expectation(0, p), std::domain_error);
    }
}

TEST_SUITE("diagonalization_oracle") {
    TEST_CASE("commutative_oscillator_is_exact") {
        auto p = unit_oscillator(0.0);
        auto s = diagonalize_oracle(p, 12);
        REQUIRE(static_cast<int>(s.levels.size()) == 12);
        CHECK(s.method == SpectrumMethod::Diagonalization);
        CHECK(s.basis_size == 12);
        // Shell structure: energies 1, 2, 2, 3, 3, 3, 4, ... in units hbar omega.
        const double expected[12] = {1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5};
        for (int i = 0; i < 12; ++i)
            CHECK(s.levels[i].energy_joule == doctest::Approx(expected[i]).epsilon(1e-10));
    }

    TEST_CASE("momentum_deformed_oscillator_matches_the_closed_form") {
        // theta = 0, g = 0: exact spectrum hbar W (n+1) + hbar lambda m_l with
        // W = omega sqrt(1 + etabar^2), lambda = omega etabar, etabar = eta/2m hbar omega.
        auto p = unit_oscillator(2e-3);
        auto s = diagonalize_oracle(p, 16);
        double etabar = p.eta / (2.0 * p.m * p.hbar * p.omega());
        double W = p.omega() * std::sqrt(1.0 + etabar * etabar);
        double lambda = p.omega() * etabar;
        std::vector<double> exact;
        for (int n = 0; n <= 6; ++n)
            for (int m_l = -n; m_l <= n; m_l += 2)
                exact.push_back(p.hbar * (W * (n + 1) + lambda * m_l));
        std::sort(exact.begin(), exact.end());
        for (int i = 0; i < 6; ++i)
            CHECK(rel_err(s.levels[i].energy_joule, exact[i]) < 1e-10);
    }

    TEST_CASE("coefficient_values") {
        PhysicalParams p;
        p.m = 1.0;
        p.hbar = 1.0;
        p.g = 2.0;
        p.k = 1.0;
        p.theta = 0.1;
        p.eta = 0.2;
        auto c = numeric_coefficients(p);
        double xi = p.theta * p.eta / (4.0 * p.hbar * p.hbar);
        double C = 1.0 / (1.0 - xi);
        CHECK(c.C == doctest::Approx(C).epsilon(1e-14));
        CHECK(c.C_prime ==
              doctest::Approx(C * C * (1.0 + p.k * p.m * p.theta * p.theta / 4.0)).epsilon(1e-14));
        CHECK(c.D == doctest::Approx(p.k * C * C / 2.0 + p.eta * p.eta * C * C / 8.0).epsilon(1e-14));
        CHECK(c.E ==
              doctest::Approx(C * C * (p.eta / 2.0 - p.k * p.theta / 2.0)).epsilon(1e-14));
        CHECK(c.gravity_x == doctest::Approx(p.m * p.g * C * C).epsilon(1e-14));
        CHECK(c.gravity_py == doctest::Approx(p.m * p.g * C * C * p.theta / 2.0).epsilon(1e-14));
    }

    TEST_CASE("error_paths") {
        auto p = unit_oscillator(0.0);
        CHECK_THROWS_AS(diagonalize_oracle(p, 3), std::invalid_argument);
        PhysicalParams free;
        free.k = 0.0;
        CHECK_THROWS_AS(diagonalize_oracle(free, 8), std::domain_error);
        PhysicalParams singular = unit_oscillator(0.0);
        singular.theta = 2.0;
        singular.eta = 2.0;  // theta eta = 4 hbar^2
        CHECK_THROWS_AS(numeric_coefficients(singular), std::domain_error);
    }
}

TEST_SUITE("perturbation_report") {
    TEST_CASE("shell_enumeration") {
        auto shells = complete_shells(2);
        const std::vector<std::pair<int, int>> expected = {
            {0, 0}, {1, -1}, {1, 1}, {2, -2}, {2, 0}, {2, 2}};
        CHECK(shells == expected);
    }

    TEST_CASE("first_order_shifts") {
        auto p = unit_oscillator(2e-3);
        auto report = perturbation_shifts(p, complete_shells(2));
        double v1 = p.eta / (2.0 * p.m * p.hbar);
        CHECK(report.v1_total == doctest::Approx(v1).epsilon(1e-14));
        CHECK(report.v2_x2 == doctest::Approx(p.eta * p.eta / 8.0).epsilon(1e-14));
        CHECK(report.v2_px2 == doctest::Approx(0.0));
        REQUIRE(report.states.size() == 6);
        for (const auto& s : report.states) {
            CHECK(s.e0 == doctest::Approx(p.hbar * p.omega() * (s.n + 1)).epsilon(1e-14));
            CHECK(s.delta1 == doctest::Approx(v1 * p.hbar * s.m_l).epsilon(1e-14));
            CHECK(s.delta1_printed == doctest::Approx(s.delta1 / 2.0).epsilon(1e-14));
            CHECK(s.e_first_order == doctest::Approx(s.e0 + s.delta1).epsilon(1e-14));
            CHECK(s.oracle_delta == -1.0);
            double x2 = x2_expectation(s.n, p);
            double px2 = px2_expectation(s.n, p);
            CHECK(s.delta2 ==
                  doctest::Approx(report.v2_px2 * px2 + report.v2_x2 * x2).epsilon(1e-12));
        }
        // m_l = 0 rows have no first-order shift.
        CHECK(report.states[0].delta1 == 0.0);
        CHECK(report.states[4].delta1 == 0.0);
    }

    TEST_CASE("oracle_comparison_converges") {
        auto p = unit_oscillator(2e-3);  // coupling ratio 1e-3
        auto report = perturbation_shifts(p, complete_shells(2));
        attach_oracle_deltas(report, p, {8, 12, 16});
        REQUIRE(report.oracle_basis_sizes == std::vector<int>{8, 12, 16});
        REQUIRE(report.oracle_max_deltas.size() == 3);
        for (const auto& s : report.states) {
            CHECK(s.oracle_delta >= 0.0);
            CHECK(s.oracle_delta < 1e-4);  // first order tracks the oracle
        }
        // The residual is the second-order term, already converged at basis 8;
        // larger bases may only add eigensolver noise.
        for (std::size_t i = 1; i < report.oracle_max_deltas.size(); ++i)
            CHECK(report.oracle_max_deltas[i] <=
                  report.oracle_max_deltas[i - 1] * (1.0 + 1e-6) + 1e-15);
    }

    TEST_CASE("residual_scales_quadratically_in_the_coupling") {
        double deltas[2];
        int idx = 0;
        for (double coupling : {1e-3, 5e-4}) {
            auto p = unit_oscillator(2.0 * coupling);
            auto report = perturbation_shifts(p, complete_shells(2));
            attach_oracle_deltas(report, p, {16});
            deltas[idx++] = report.oracle_max_deltas.back();
        }
        double slope = std::log(deltas[0] / deltas[1]) / std::log(2.0);
        CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
    }

    TEST_CASE("incomplete_shell_sets_are_rejected") {
        auto p = unit_oscillator(1e-3);
        std::vector<std::pair<int, int>> partial = {{0, 0}, {1, 1}};
        auto report = perturbation_shifts(p, partial);
        CHECK_THROWS_AS(attach_oracle_deltas(report, p, {8}), std::invalid_argument);
    }

    TEST_CASE("invalid_states_are_rejected") {
        auto p = unit_oscillator(1e-3);
        std::vector<std::pair<int, int>> bad = {{1, 0}};
        CHECK_THROWS_AS(perturbation_shifts(p, bad), std::invalid_argument);
        PhysicalParams free;
        free.k = 0.0;
        CHECK_THROWS_AS(perturbation_shifts(free, complete_shells(1)), std::domain_error);
    }
}

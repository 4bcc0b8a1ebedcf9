#include "doctest.h"

#include <ncwell/bopp.hpp>
#include <ncwell/symbols.hpp>

#include <stdexcept>

using namespace ncwell;

namespace {

using SC = ScalarCoefficient;

SC hb() { return SC::symbol(sym::hbar); }
SC th() { return SC::symbol(sym::theta); }
SC et() { return SC::symbol(sym::eta); }

SC xi_simple() { return th() * et() / (SC(4) * hb() * hb()); }

const MapMode kAllModes[] = {MapMode::Full, MapMode::SpaceOnly, MapMode::MomentumOnly,
                             MapMode::Commutative};

} // namespace

TEST_SUITE("bopp_maps") {
    TEST_CASE("mode_names_round_trip") {
        for (MapMode m : kAllModes) CHECK(map_mode_from_name(map_mode_name(m)) == m);
        CHECK_THROWS_AS(map_mode_from_name("sideways"), std::invalid_argument);
    }

    TEST_CASE("forward_map_images") {
        auto map = BoppMap::nc_to_aux(MapMode::Full);
        CHECK(map.scale == SC(1));
        // x -> x' - (theta/2hbar) p'_y
        const auto& ix = map.images[0];
        CHECK(ix.coefficient(Mono4{1, 0, 0, 0}) == SC(1));
        CHECK(ix.coefficient(Mono4{0, 0, 0, 1}) == -th() / (SC(2) * hb()));
        // p_x -> p'_x + (eta/2hbar) y'
        const auto& ipx = map.images[2];
        CHECK(ipx.coefficient(Mono4{0, 0, 1, 0}) == SC(1));
        CHECK(ipx.coefficient(Mono4{0, 1, 0, 0}) == et() / (SC(2) * hb()));
    }

    TEST_CASE("inverse_map_carries_the_scale") {
        auto map = BoppMap::aux_to_nc(MapMode::Full);
        auto C = (SC(1) - xi_simple()).inverse();
        CHECK(map.scale == C);
        // x' -> C (x + (theta/2hbar) p_y)
        const auto& ix = map.images[0];
        CHECK(ix.coefficient(Mono4{1, 0, 0, 0}) == C);
        CHECK(ix.coefficient(Mono4{0, 0, 0, 1}) == C * th() / (SC(2) * hb()));
    }

    TEST_CASE("mode_masking") {
        auto space = BoppMap::nc_to_aux(MapMode::SpaceOnly);
        CHECK(space.theta_scale() == th());
        CHECK(space.eta_scale().is_zero());
        auto momentum = BoppMap::nc_to_aux(MapMode::MomentumOnly);
        CHECK(momentum.theta_scale().is_zero());
        CHECK(momentum.eta_scale() == et());
        auto comm = BoppMap::nc_to_aux(MapMode::Commutative);
        CHECK(comm.theta_scale().is_zero());
        CHECK(comm.eta_scale().is_zero());
        // Commutative images are the bare generators.
        for (int i = 0; i < kGenCount; ++i)
            CHECK(comm.images[i] ==
                  WeylElement::generator(comm.target, static_cast<Gen>(i)));
        // Single-parameter inverse maps have no scale factor.
        CHECK(BoppMap::aux_to_nc(MapMode::SpaceOnly).scale == SC(1));
        CHECK(BoppMap::aux_to_nc(MapMode::MomentumOnly).scale == SC(1));
    }

    TEST_CASE("round_trip_is_identity_on_generators") {
        for (MapMode mode : kAllModes) {
            auto fwd = BoppMap::nc_to_aux(mode);
            auto bwd = BoppMap::aux_to_nc(mode);
            for (int i = 0; i < kGenCount; ++i) {
                auto g = static_cast<Gen>(i);
                CHECK(apply_map(bwd, fwd.images[i]) == WeylElement::generator(fwd.source, g));
                CHECK(apply_map(fwd, bwd.images[i]) == WeylElement::generator(bwd.source, g));
            }
        }
    }

    TEST_CASE("round_trip_is_identity_on_elements_in_single_parameter_modes") {
        for (MapMode mode : {MapMode::SpaceOnly, MapMode::MomentumOnly, MapMode::Commutative}) {
            auto fwd = BoppMap::nc_to_aux(mode);
            auto bwd = BoppMap::aux_to_nc(mode);
            auto x = WeylElement::generator(fwd.source, Gen::X);
            auto py = WeylElement::generator(fwd.source, Gen::Py);
            auto e = x * x * SC::rational(1, 3) + x * py + WeylElement::scalar(fwd.source, th());
            CHECK(apply_map(bwd, apply_map(fwd, e)) == e);
        }
    }

    TEST_CASE("apply_map_rejects_foreign_elements") {
        auto map = BoppMap::nc_to_aux(MapMode::Full);
        auto foreign = WeylElement::generator(map.target, Gen::X);
        CHECK_THROWS_AS(apply_map(map, foreign), std::invalid_argument);
    }

    TEST_CASE("effective_commutator_value") {
        auto map = BoppMap::nc_to_aux(MapMode::Full);
        auto value = verify_effective_commutator(map);
        auto expected = WeylElement::scalar(
            map.target, SC::i() * hb() * (SC(1) + xi_simple()));
        CHECK(value == expected);
        CHECK(value.to_string() == "(((i)*hbar^2 + (1/4*i)*theta*eta)/hbar)");
    }

    TEST_CASE("image_commutators_reproduce_the_deformed_relations") {
        auto map = BoppMap::nc_to_aux(MapMode::Full);
        auto checks = image_commutators(map);
        REQUIRE(checks.size() == 6);
        auto ih_eff = SC::i() * hb() * (SC(1) + xi_simple());
        for (const auto& c : checks) {
            SC expected;
            if (c.a == Gen::X && c.b == Gen::Y) expected = SC::i() * th();
            else if (c.a == Gen::Px && c.b == Gen::Py) expected = SC::i() * et();
            else if ((c.a == Gen::X && c.b == Gen::Px) || (c.a == Gen::Y && c.b == Gen::Py))
                expected = ih_eff;
            else expected = SC(0);
            CHECK(c.value == WeylElement::scalar(map.target, expected));
        }
    }

    TEST_CASE("single_parameter_modes_reproduce_relations_without_correction") {
        for (MapMode mode : {MapMode::SpaceOnly, MapMode::MomentumOnly}) {
            auto map = BoppMap::nc_to_aux(mode);
            for (const auto& c : image_commutators(map)) {
                auto source_rel = map.source->commutator(c.a, c.b);
                CHECK(c.value == WeylElement::scalar(map.target, source_rel));
            }
        }
    }
}

TEST_SUITE("effective_planck") {
    TEST_CASE("variant_names_round_trip") {
        CHECK(planck_variant_from_name(planck_variant_name(PlanckVariant::Simple)) ==
              PlanckVariant::Simple);
        CHECK(planck_variant_from_name(planck_variant_name(PlanckVariant::General)) ==
              PlanckVariant::General);
        CHECK_THROWS_AS(planck_variant_from_name("fancy"), std::invalid_argument);
    }

    TEST_CASE("simple_variant") {
        auto ep = effective_planck(th(), et(), SC::symbol(sym::mass), SC::symbol(sym::k),
                                   PlanckVariant::Simple);
        CHECK(ep.xi == xi_simple());
        CHECK(ep.xi.to_string() == "(1/4*theta*eta)/hbar^2");
        CHECK(ep.hbar_eff == hb() * (SC(1) + ep.xi));
    }

    TEST_CASE("general_variant") {
        auto m = SC::symbol(sym::mass);
        auto k = SC::symbol(sym::k);
        auto ep = effective_planck(th(), et(), m, k, PlanckVariant::General);
        auto expected = m * k * th() * th() / (SC(8) * hb() * hb()) -
                        et() * th() / (SC(4) * hb() * hb());
        CHECK(ep.xi == expected);
        CHECK(ep.xi.to_string() == "(1/8*theta^2*m*k - 1/4*theta*eta)/hbar^2");
        CHECK(ep.hbar_eff == hb() * (SC(1) + ep.xi));
    }

    TEST_CASE("series_order_two_matches_the_general_variant") {
        auto m = SC::symbol(sym::mass);
        auto k = SC::symbol(sym::k);
        auto order2 = expand_C_series(k, m, th(), et(), 2);
        auto ep = effective_planck(th(), et(), m, k, PlanckVariant::General);
        CHECK(order2 == SC(1) + ep.xi);
    }

    TEST_CASE("series_tail_starts_beyond_order_two") {
        auto m = SC::symbol(sym::mass);
        auto k = SC::symbol(sym::k);
        auto order2 = expand_C_series(k, m, th(), et(), 2);
        auto order4 = expand_C_series(k, m, th(), et(), 4);
        CHECK(order4 != order2);
        CHECK(equal_to_deformation_order(order4, order2, 2));
        // The next surviving corrections are quartic (theta^4 and eta theta^3).
        CHECK(equal_to_deformation_order(order4, order2, 3));
        CHECK_FALSE(equal_to_deformation_order(order4, order2, 4));
        CHECK(expand_C_series(k, m, th(), et(), 0) == SC(1));
    }

    TEST_CASE("deformation_order_comparison") {
        auto a = SC(1) + th() * et();
        auto b = SC(1);
        CHECK(equal_to_deformation_order(a, b, 1));
        CHECK_FALSE(equal_to_deformation_order(a, b, 2));
        CHECK(equal_to_deformation_order(a, a, 10));
    }

    TEST_CASE("grading_symbol_is_dimensionless") {
        auto id = grading_symbol();
        CHECK(SymbolRegistry::instance().dimension_of(id).is_dimensionless());
        CHECK(grading_symbol() == id);
    }
}

#include "doctest.h"

#include <ncwell/property_suite.hpp>

#include <string>
#include <vector>

using namespace ncwell;

TEST_SUITE("property_suite") {
    TEST_CASE("full_run_passes_every_law") {
        auto result = run_property_suite();
        CHECK(result.all_passed());
        CHECK(result.properties.size() == 17);
        CHECK(result.total_instances() == 17 * 200);
        for (const auto& p : result.properties) {
            INFO(p.name << ": " << p.first_failure);
            CHECK(p.instances == 200);
            CHECK(p.failures == 0);
            CHECK(p.first_failure.empty());
        }
    }

    TEST_CASE("property_roster_is_stable") {
        auto result = run_property_suite(1);
        const std::vector<std::string> expected = {
            "jacobi_identity",
            "product_associativity",
            "adjoint_involution",
            "adjoint_antihomomorphism",
            "normal_order_idempotence",
            "commutator_antisymmetry",
            "commutator_bilinearity",
            "scalar_canonicalization",
            "scalar_field_laws",
            "map_linearity",
            "map_multiplicativity",
            "full_mode_commutator_defect",
            "map_round_trip",
            "map_preserves_hermiticity",
            "transformed_forms_hermitian",
            "commutative_limit",
            "bucket_resummation",
        };
        REQUIRE(result.properties.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(result.properties[i].name == expected[i]);
    }

    TEST_CASE("alternate_seed_also_passes") {
        auto result = run_property_suite(25, 0xDEADBEEFull);
        CHECK(result.all_passed());
        CHECK(result.total_instances() == 17 * 25);
    }
}

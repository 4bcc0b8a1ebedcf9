#include "doctest.h"

#include <ncwell/conformance.hpp>

#include <map>
#include <string>
#include <vector>

using namespace ncwell;

namespace {

// Frozen verdict tables: each pipeline's term-by-term outcome against the
// printed reference equations.  A change here is a change in what the
// engine derives and must be deliberate.
struct ExpectedRow {
    const char* term;
    Verdict verdict;
};

const std::vector<ExpectedRow>& expected_rows(const std::string& target) {
    static const std::map<std::string, std::vector<ExpectedRow>> tables = {
        {"eq5",
         {{"[x, y]", Verdict::Match},
          {"[x, p_x]", Verdict::Match},
          {"[x, p_y]", Verdict::Match},
          {"[y, p_x]", Verdict::Match},
          {"[y, p_y]", Verdict::Match},
          {"[p_x, p_y]", Verdict::Match}}},
        {"eq9",
         {{"kinetic_x", Verdict::Match},
          {"kinetic_y", Verdict::Match},
          {"angular_momentum", Verdict::Match},
          {"confinement", Verdict::Match},
          {"gravity_momentum", Verdict::Match},
          {"gravity_linear", Verdict::Match}}},
        {"eq11",
         {{"shift_scale", Verdict::Match},
          {"shift_offset", Verdict::Match},
          {"kinetic_x", Verdict::Match},
          {"kinetic_y", Verdict::Match},
          {"angular_momentum", Verdict::Match},
          {"confinement", Verdict::Match},
          {"gravity_linear", Verdict::Match},
          {"gravity_momentum", Verdict::Match},
          {"constant", Verdict::Informational}}},
        {"eq12",
         {{"gravity_linear (collapsed)", Verdict::Match},
          {"map factor cancellation", Verdict::Match}}},
        {"eq16",
         {{"kinetic_x", Verdict::Match},
          {"kinetic_y", Verdict::Match},
          {"confinement", Verdict::Match},
          {"gravity_linear", Verdict::Match},
          {"angular_momentum", Verdict::Match},
          {"gravity_momentum", Verdict::Match}}},
        {"eq18",
         {{"shift_scale", Verdict::Match},
          {"shift_offset", Verdict::Match},
          {"kinetic_x", Verdict::MatchLeadingOrder},
          {"kinetic_y", Verdict::MatchLeadingOrder},
          {"gravity_linear", Verdict::MatchLeadingOrder},
          {"angular_momentum", Verdict::Unspecified},
          {"confinement", Verdict::Match},
          {"gravity_momentum", Verdict::Match},
          {"constant", Verdict::Informational}}},
        {"eq19",
         {{"kinetic_x", Verdict::Match},
          {"kinetic_y", Verdict::Match},
          {"gravity_linear", Verdict::Match},
          {"gravity_momentum", Verdict::Match},
          {"confinement", Verdict::Match},
          {"angular_momentum", Verdict::Mismatch}}},
        {"eq20",
         {{"C_prime", Verdict::Match},
          {"D", Verdict::Match},
          {"E", Verdict::Mismatch},
          {"gravity_linear", Verdict::Match},
          {"gravity_momentum", Verdict::Match}}},
        {"eq27",
         {{"kinetic", Verdict::Mismatch},
          {"gravity_linear", Verdict::Mismatch},
          {"gravity_momentum", Verdict::Mismatch},
          {"confinement", Verdict::Mismatch},
          {"angular_momentum", Verdict::Mismatch}}},
    };
    return tables.at(target);
}

void check_report(const ConformanceReport& rep) {
    const auto& expected = expected_rows(rep.target);
    REQUIRE(rep.rows.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        INFO(rep.target << " row " << i << " (" << rep.rows[i].term << ")");
        CHECK(rep.rows[i].term == expected[i].term);
        CHECK(std::string(verdict_name(rep.rows[i].verdict)) ==
              verdict_name(expected[i].verdict));
        CHECK_FALSE(rep.rows[i].derived.empty());
        CHECK_FALSE(rep.rows[i].reference.empty());
    }
}

} // namespace

TEST_SUITE("conformance_reports") {
    TEST_CASE("verdict_names") {
        CHECK(std::string(verdict_name(Verdict::Match)) == "MATCH");
        CHECK(std::string(verdict_name(Verdict::MatchLeadingOrder)) == "MATCH-LEADING-ORDER");
        CHECK(std::string(verdict_name(Verdict::Mismatch)) == "MISMATCH");
        CHECK(std::string(verdict_name(Verdict::Unspecified)) == "UNSPECIFIED-IN-REFERENCE");
        CHECK(std::string(verdict_name(Verdict::Informational)) == "INFORMATIONAL");
    }

    TEST_CASE("map_commutators") {
        auto rep = map_commutator_report();
        CHECK(rep.target == "eq5");
        CHECK(rep.clean());
        check_report(rep);
        // The mixed commutators carry the effective-constant annotation.
        CHECK(rep.rows[1].note.find("effective-constant") != std::string::npos);
        CHECK(rep.rows[4].note.find("effective-constant") != std::string::npos);
    }

    TEST_CASE("gravity_pipeline") {
        auto rep9 = conformance_report(reference_form(ConformanceTarget::Eq9),
                                       ConformanceTarget::Eq9);
        CHECK(rep9.clean());
        check_report(rep9);

        auto rep11 = conformance_report(reference_form(ConformanceTarget::Eq11),
                                        ConformanceTarget::Eq11);
        CHECK(rep11.clean());
        check_report(rep11);

        auto rep12 = gravity_collapse_report();
        CHECK(rep12.target == "eq12");
        CHECK(rep12.clean());
        check_report(rep12);
    }

    TEST_CASE("space_only_pipeline") {
        auto rep16 = conformance_report(reference_form(ConformanceTarget::Eq16),
                                        ConformanceTarget::Eq16);
        CHECK(rep16.clean());
        check_report(rep16);

        auto rep18 = conformance_report(reference_form(ConformanceTarget::Eq18),
                                        ConformanceTarget::Eq18);
        CHECK(rep18.clean());  // leading-order and unspecified rows are not mismatches
        check_report(rep18);
        // The placeholder row documents the value the engine derives for it.
        CHECK(rep18.rows[5].note.find("k theta/(2 hbar") != std::string::npos);
    }

    TEST_CASE("full_mode_pipeline_documents_the_cross_term_sign") {
        auto form = reference_form(ConformanceTarget::Eq19);
        auto rep19 = conformance_report(form, ConformanceTarget::Eq19);
        CHECK_FALSE(rep19.clean());
        check_report(rep19);
        CHECK(rep19.rows[5].note.find("positive orientation") != std::string::npos);

        auto rep20 = conformance_report(form, ConformanceTarget::Eq20);
        CHECK_FALSE(rep20.clean());
        check_report(rep20);
        CHECK(rep20.rows[2].note.find("eta/2m hbar + k theta/2 hbar") != std::string::npos);
    }

    TEST_CASE("effective_rewrite_rows_all_disagree_as_typed") {
        auto rep27 = conformance_report(reference_form(ConformanceTarget::Eq27),
                                        ConformanceTarget::Eq27);
        CHECK_FALSE(rep27.clean());
        check_report(rep27);
        // The dimension lint fires exactly where the printed coefficients are
        // not homogeneous.
        CHECK(rep27.rows[0].note.find("not dimensionally homogeneous") != std::string::npos);
        CHECK(rep27.rows[3].note.find("not dimensionally homogeneous") != std::string::npos);
        CHECK(rep27.rows[1].note.find("not dimensionally homogeneous") == std::string::npos);
        CHECK(rep27.rows[2].note.find("not dimensionally homogeneous") == std::string::npos);
        CHECK(rep27.rows[4].note.find("not dimensionally homogeneous") == std::string::npos);
    }

    TEST_CASE("full_conformance_order_and_mismatch_census") {
        auto reports = full_conformance();
        REQUIRE(reports.size() == 9);
        const char* order[] = {"eq5", "eq9", "eq11", "eq12", "eq16",
                               "eq18", "eq19", "eq20", "eq27"};
        int mismatches = 0;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            CHECK(reports[i].target == order[i]);
            check_report(reports[i]);
            for (const auto& row : reports[i].rows)
                if (row.verdict == Verdict::Mismatch) ++mismatches;
        }
        // One cross-term sign row in each of eq19/eq20, and the five rows of
        // the effective-constant rewrite.
        CHECK(mismatches == 7);
    }

    TEST_CASE("target_names") {
        CHECK(std::string(conformance_target_name(ConformanceTarget::Eq9)) == "eq9");
        CHECK(std::string(conformance_target_name(ConformanceTarget::Eq27)) == "eq27");
    }
}

#pragma once

#include "ncwell/hamiltonian.hpp"

#include <string>
#include <vector>

namespace ncwell {

/// Outcome of comparing one derived coefficient against the reference
/// equation's printed coefficient.
enum class Verdict {
    Match,             ///< exact symbolic equality
    MatchLeadingOrder, ///< equal through first order in the deformation parameters
    Mismatch,          ///< provably different
    Unspecified,       ///< the reference shows no value (placeholder) — derived value displayed
    Informational,     ///< tracked by the engine but absent from the reference; not compared
};

const char* verdict_name(Verdict v);

/// One compared term.  `derived` and `reference` are both displayed;
/// `reference` reproduces the printed form as typed, so visible typos in it
/// are annotated in `note` rather than silently corrected.
struct ConformanceRow {
    std::string term;
    std::string derived;
    std::string reference;
    Verdict verdict;
    std::string note;
};

/// Term-by-term comparison against one reference equation.  The report
/// documents; it never asserts.
struct ConformanceReport {
    std::string target; ///< short id such as "eq9"
    std::string title;
    std::vector<ConformanceRow> rows;

    bool clean() const; ///< true when no row is a Mismatch
};

/// Reference equations the transformed-Hamiltonian comparison knows about.
enum class ConformanceTarget { Eq9, Eq11, Eq16, Eq18, Eq19, Eq20, Eq27 };

const char* conformance_target_name(ConformanceTarget t);

/// Compares the collected form `hf` against the chosen reference equation.
/// The caller is expected to pass the form produced by the matching
/// pipeline (see reference_form); any other form simply reads as mismatches.
ConformanceReport conformance_report(const HamiltonianForm& hf, ConformanceTarget target);

/// Runs the standard pipeline that the given reference equation describes
/// and returns the resulting form.
HamiltonianForm reference_form(ConformanceTarget target);

/// Commutators of the deformed-to-auxiliary map images, compared against
/// the deformed commutation relations; the mixed pair carries the
/// (1 + theta*eta/4hbar^2) factor of the effective Planck constant.
ConformanceReport map_commutator_report();

/// The gravitational-coefficient collapse identity:
/// m g C (1 - theta*eta/4hbar^2) x = m g x after the momentum shift.
ConformanceReport gravity_collapse_report();

/// Every report in reference order: the map commutators, the gravity
/// pipeline, the collapse identity, the space-only oscillator pipeline,
/// the full-mode pipeline with its shorthand coefficients, and the
/// effective-constant rewrite.
std::vector<ConformanceReport> full_conformance();

} // namespace ncwell

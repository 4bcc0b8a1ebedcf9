#pragma once

#include "ncwell/conformance.hpp"
#include "ncwell/hamiltonian.hpp"
#include "ncwell/perturbation.hpp"
#include "ncwell/property_suite.hpp"
#include "ncwell/spectrum.hpp"

#include <string>
#include <vector>

namespace ncwell {

/// Fixed float formatting (12 significant digits) used by every emitter,
/// so identical inputs serialize byte-identically.
std::string format_double(double v);

std::string json_escape(const std::string& s);

/// Gravity-well level table with semiclassical and deformation-shifted
/// columns: the composite the spectrum report is built from.
struct WellSpectrumTable {
    PlanckVariant variant = PlanckVariant::Simple;
    double hbar = 0.0;
    double xi = 0.0;
    double hbar_eff = 0.0;
    std::vector<int> n;
    std::vector<double> airy_joule;
    std::vector<double> airy_ev;
    std::vector<double> wkb_ev;
    std::vector<double> shifted_ev; ///< Airy levels evaluated at hbar_eff
};

WellSpectrumTable make_well_table(const PhysicalParams& p, int n_max, PlanckVariant variant);

std::string to_json(const SpectrumResult& r);
std::string to_csv(const SpectrumResult& r);
std::string to_text(const SpectrumResult& r);

std::string to_json(const WellSpectrumTable& t);
std::string to_csv(const WellSpectrumTable& t);
std::string to_text(const WellSpectrumTable& t);

std::string to_json(const PerturbationReport& r);
std::string to_csv(const PerturbationReport& r);
std::string to_text(const PerturbationReport& r);

std::string to_json(const ConformanceReport& r);
std::string to_text(const ConformanceReport& r);

std::string to_json(const PropertySuiteResult& r);
std::string to_text(const PropertySuiteResult& r);

/// The verify payload: every conformance report plus the property summary.
std::string to_json(const std::vector<ConformanceReport>& reports, const PropertySuiteResult& suite);
std::string to_csv(const std::vector<ConformanceReport>& reports);
std::string to_text(const std::vector<ConformanceReport>& reports, const PropertySuiteResult& suite);

std::string to_json(const HamiltonianForm& hf);
std::string to_csv(const HamiltonianForm& hf);
std::string to_text(const HamiltonianForm& hf);

std::string to_json(const NCBound& b);
std::string to_csv(const NCBound& b);
std::string to_text(const NCBound& b);

} // namespace ncwell

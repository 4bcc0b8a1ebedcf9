#include "ncwell/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace ncwell {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) { return '"' + json_escape(s) + '"'; }

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

WellSpectrumTable make_well_table(const PhysicalParams& p, int n_max, PlanckVariant variant) {
    WellSpectrumTable t;
    t.variant = variant;
    t.hbar = p.hbar;
    t.xi = xi_value(p, variant);
    t.hbar_eff = hbar_eff_value(p, variant);

    SpectrumResult airy = gravity_well_spectrum(p, n_max);
    SpectrumResult wkb = gravity_well_spectrum_wkb(p, n_max);
    PhysicalParams shifted = p;
    shifted.hbar = t.hbar_eff;
    SpectrumResult eff = gravity_well_spectrum(shifted, n_max);

    for (int i = 0; i < n_max; ++i) {
        t.n.push_back(i + 1);
        t.airy_joule.push_back(airy.levels[i].energy_joule);
        t.airy_ev.push_back(airy.levels[i].energy_ev);
        t.wkb_ev.push_back(wkb.levels[i].energy_ev);
        t.shifted_ev.push_back(eff.levels[i].energy_ev);
    }
    return t;
}

// --- SpectrumResult ---------------------------------------------------------

std::string to_json(const SpectrumResult& r) {
    std::ostringstream os;
    os << "{\"method\":" << quoted(spectrum_method_name(r.method))
       << ",\"basis_size\":" << r.basis_size << ",\"levels\":[";
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        const auto& l = r.levels[i];
        if (i) os << ',';
        os << "{\"quantum_numbers\":[" << join_ints(l.quantum_numbers, ',')
           << "],\"energy_joule\":" << format_double(l.energy_joule)
           << ",\"energy_ev\":" << format_double(l.energy_ev) << '}';
    }
    os << "]}";
    return os.str();
}

std::string to_csv(const SpectrumResult& r) {
    std::ostringstream os;
    os << "quantum_numbers,energy_joule,energy_ev\n";
    for (const auto& l : r.levels)
        os << join_ints(l.quantum_numbers, ';') << ',' << format_double(l.energy_joule) << ','
           << format_double(l.energy_ev) << '\n';
    return os.str();
}

std::string to_text(const SpectrumResult& r) {
    std::ostringstream os;
    os << "method: " << spectrum_method_name(r.method);
    if (r.basis_size > 0) os << "  (basis " << r.basis_size << " per dimension)";
    os << '\n';
    for (const auto& l : r.levels)
        os << "  [" << join_ints(l.quantum_numbers, ',') << "]  "
           << format_double(l.energy_joule) << " J  " << format_double(l.energy_ev) << " eV\n";
    return os.str();
}

// --- WellSpectrumTable ------------------------------------------------------

std::string to_json(const WellSpectrumTable& t) {
    std::ostringstream os;
    os << "{\"variant\":" << quoted(planck_variant_name(t.variant))
       << ",\"hbar\":" << format_double(t.hbar) << ",\"xi\":" << format_double(t.xi)
       << ",\"hbar_eff\":" << format_double(t.hbar_eff) << ",\"levels\":[";
    for (std::size_t i = 0; i < t.n.size(); ++i) {
        if (i) os << ',';
        os << "{\"n\":" << t.n[i] << ",\"airy_joule\":" << format_double(t.airy_joule[i])
           << ",\"airy_ev\":" << format_double(t.airy_ev[i])
           << ",\"wkb_ev\":" << format_double(t.wkb_ev[i])
           << ",\"shifted_ev\":" << format_double(t.shifted_ev[i]) << '}';
    }
    os << "]}";
    return os.str();
}

std::string to_csv(const WellSpectrumTable& t) {
    std::ostringstream os;
    os << "n,airy_joule,airy_ev,wkb_ev,shifted_ev\n";
    for (std::size_t i = 0; i < t.n.size(); ++i)
        os << t.n[i] << ',' << format_double(t.airy_joule[i]) << ','
           << format_double(t.airy_ev[i]) << ',' << format_double(t.wkb_ev[i]) << ','
           << format_double(t.shifted_ev[i]) << '\n';
    return os.str();
}

std::string to_text(const WellSpectrumTable& t) {
    std::ostringstream os;
    os << "gravity-well levels (variant " << planck_variant_name(t.variant)
       << "): xi = " << format_double(t.xi) << ", hbar_eff = " << format_double(t.hbar_eff)
       << " J s\n";
    os << "  n    E_n (J)            E_n (eV)           WKB (eV)           shifted (eV)\n";
    for (std::size_t i = 0; i < t.n.size(); ++i) {
        char row[160];
        std::snprintf(row, sizeof(row), "  %-4d %-18s %-18s %-18s %s\n", t.n[i],
                      format_double(t.airy_joule[i]).c_str(), format_double(t.airy_ev[i]).c_str(),
                      format_double(t.wkb_ev[i]).c_str(), format_double(t.shifted_ev[i]).c_str());
        os << row;
    }
    return os.str();
}

// --- PerturbationReport -----------------------------------------------------

namespace {

std::string oracle_delta_json(double v) { return v < 0 ? "null" : format_double(v); }

} // namespace

std::string to_json(const PerturbationReport& r) {
    std::ostringstream os;
    os << "{\"v1_total\":" << format_double(r.v1_total)
       << ",\"v2_px2\":" << format_double(r.v2_px2) << ",\"v2_x2\":" << format_double(r.v2_x2)
       << ",\"states\":[";
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        const auto& s = r.states[i];
        if (i) os << ',';
        os << "{\"n\":" << s.n << ",\"m_l\":" << s.m_l << ",\"e0\":" << format_double(s.e0)
           << ",\"delta1\":" << format_double(s.delta1)
           << ",\"delta1_printed\":" << format_double(s.delta1_printed)
           << ",\"delta2\":" << format_double(s.delta2)
           << ",\"e_first_order\":" << format_double(s.e_first_order)
           << ",\"oracle_delta\":" << oracle_delta_json(s.oracle_delta) << '}';
    }
    os << "],\"oracle\":[";
    for (std::size_t i = 0; i < r.oracle_basis_sizes.size(); ++i) {
        if (i) os << ',';
        os << "{\"basis\":" << r.oracle_basis_sizes[i]
           << ",\"max_delta\":" << format_double(r.oracle_max_deltas[i]) << '}';
    }
    os << "]}";
    return os.str();
}

std::string to_csv(const PerturbationReport& r) {
    std::ostringstream os;
    os << "n,m_l,e0_joule,delta1_joule,delta1_printed_joule,delta2_joule,e_first_order_joule,"
          "oracle_delta\n";
    for (const auto& s : r.states) {
        os << s.n << ',' << s.m_l << ',' << format_double(s.e0) << ','
           << format_double(s.delta1) << ',' << format_double(s.delta1_printed) << ','
           << format_double(s.delta2) << ',' << format_double(s.e_first_order) << ','
           << (s.oracle_delta < 0 ? std::string() : format_double(s.oracle_delta)) << '\n';
    }
    return os.str();
}

std::string to_text(const PerturbationReport& r) {
    std::ostringstream os;
    os << "perturbation coefficients:\n"
       << "  v1 (angular momentum) = " << format_double(r.v1_total) << "\n"
       << "  v2 on p_x^2           = " << format_double(r.v2_px2) << "\n"
       << "  v2 on x^2             = " << format_double(r.v2_x2) << "\n";
    os << "  n  m_l  e0 (J)             delta1 (J)         delta1 xp_y only   delta2 (J)       "
          "  e0+delta1 (J)      oracle delta\n";
    for (const auto& s : r.states) {
        char row[220];
        std::snprintf(row, sizeof(row), "  %-2d %-4d %-18s %-18s %-18s %-18s %-18s %s\n", s.n,
                      s.m_l, format_double(s.e0).c_str(), format_double(s.delta1).c_str(),
                      format_double(s.delta1_printed).c_str(), format_double(s.delta2).c_str(),
                      format_double(s.e_first_order).c_str(),
                      s.oracle_delta < 0 ? "-" : format_double(s.oracle_delta).c_str());
        os << row;
    }
    if (!r.oracle_basis_sizes.empty()) {
        os << "oracle max deltas by basis:";
        for (std::size_t i = 0; i < r.oracle_basis_sizes.size(); ++i)
            os << "  " << r.oracle_basis_sizes[i] << " -> "
               << format_double(r.oracle_max_deltas[i]);
        os << '\n';
    }
    return os.str();
}

// --- Conformance ------------------------------------------------------------

std::string to_json(const ConformanceReport& r) {
    std::ostringstream os;
    os << "{\"target\":" << quoted(r.target)
       << ",\"title\":" << quoted(r.title) << ",\"clean\":" << (r.clean() ? "true" : "false")
       << ",\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        if (i) os << ',';
        os << "{\"term\":" << quoted(row.term) << ",\"verdict\":" << quoted(verdict_name(row.verdict))
           << ",\"derived\":" << quoted(row.derived) << ",\"reference\":" << quoted(row.reference)
           << ",\"note\":" << quoted(row.note) << '}';
    }
    os << "]}";
    return os.str();
}

std::string to_text(const ConformanceReport& r) {
    std::ostringstream os;
    os << "=== " << r.target << ": " << r.title << "  ["
       << (r.clean() ? "clean" : "HAS MISMATCHES") << "]\n";
    for (const auto& row : r.rows) {
        os << "  " << row.term << ": " << verdict_name(row.verdict) << '\n';
        os << "     derived   = " << row.derived << '\n';
        os << "     reference = " << row.reference << '\n';
        if (!row.note.empty()) os << "     note: " << row.note << '\n';
    }
    return os.str();
}

// --- Property suite ---------------------------------------------------------

std::string to_json(const PropertySuiteResult& r) {
    std::ostringstream os;
    os << "{\"all_passed\":" << (r.all_passed() ? "true" : "false") << ",\"properties\":[";
    for (std::size_t i = 0; i < r.properties.size(); ++i) {
        const auto& p = r.properties[i];
        if (i) os << ',';
        // Timing is diagnostic only; serialization stays byte-stable.
        os << "{\"name\":" << quoted(p.name) << ",\"instances\":" << p.instances
           << ",\"failures\":" << p.failures << ",\"first_failure\":" << quoted(p.first_failure)
           << '}';
    }
    os << "]}";
    return os.str();
}

std::string to_text(const PropertySuiteResult& r) {
    std::ostringstream os;
    os << "property suite: " << (r.all_passed() ? "all passed" : "FAILURES") << '\n';
    for (const auto& p : r.properties) {
        os << "  " << p.name << ": " << (p.passed() ? "pass" : "FAIL") << " (" << p.instances
           << " instances)";
        if (!p.passed()) os << "  first failure: " << p.first_failure;
        os << '\n';
    }
    return os.str();
}

// --- Verify payload ---------------------------------------------------------

std::string to_json(const std::vector<ConformanceReport>& reports,
                    const PropertySuiteResult& suite) {
    std::ostringstream os;
    os << "{\"conformance\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) os << ',';
        os << to_json(reports[i]);
    }
    os << "],\"properties\":" << to_json(suite) << '}';
    return os.str();
}

std::string to_csv(const std::vector<ConformanceReport>& reports) {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::ostringstream os;
    os << "target,term,verdict,derived,reference,note\n";
    for (const auto& r : reports)
        for (const auto& row : r.rows)
            os << r.target << ',' << cell(row.term) << ','
               << verdict_name(row.verdict) << ',' << cell(row.derived) << ','
               << cell(row.reference) << ',' << cell(row.note) << '\n';
    return os.str();
}

std::string to_text(const std::vector<ConformanceReport>& reports,
                    const PropertySuiteResult& suite) {
    std::ostringstream os;
    for (const auto& r : reports) os << to_text(r) << '\n';
    os << to_text(suite);
    int mismatches = 0;
    for (const auto& r : reports)
        for (const auto& row : r.rows)
            if (row.verdict == Verdict::Mismatch) ++mismatches;
    os << "total MISMATCH rows: " << mismatches << '\n';
    return os.str();
}

// --- HamiltonianForm --------------------------------------------------------

namespace {

struct NamedCoefficient {
    const char* name;
    const ScalarCoefficient* value;
};

std::vector<NamedCoefficient> bucket_list(const HamiltonianForm& hf) {
    return {
        {"kinetic_x", &hf.kinetic_x},
        {"kinetic_y", &hf.kinetic_y},
        {"confinement", &hf.confinement},
        {"angular_momentum", &hf.angular_momentum},
        {"gravity_linear", &hf.gravity_linear},
        {"gravity_momentum", &hf.gravity_momentum},
        {"constant", &hf.constant},
    };
}

} // namespace

std::string to_json(const HamiltonianForm& hf) {
    std::ostringstream os;
    os << "{\"mode\":" << (hf.mode ? quoted(map_mode_name(*hf.mode)) : "null")
       << ",\"map_scale\":" << quoted(hf.map_scale.to_string());
    os << ",\"shift\":";
    if (hf.shift_source) {
        os << "{\"scale_x\":" << quoted(hf.shift_scale_x.to_string())
           << ",\"scale_y\":" << quoted(hf.shift_scale_y.to_string())
           << ",\"offset_y\":" << quoted(hf.shift_offset_y.to_string()) << '}';
    } else {
        os << "null";
    }
    os << ",\"buckets\":{";
    bool first = true;
    for (const auto& b : bucket_list(hf)) {
        if (!first) os << ',';
        first = false;
        os << quoted(b.name) << ':' << quoted(b.value->to_string());
    }
    os << "},\"residual\":" << quoted(hf.residual.to_string())
       << ",\"raw\":" << quoted(hf.raw.to_string()) << '}';
    return os.str();
}

std::string to_csv(const HamiltonianForm& hf) {
    std::ostringstream os;
    os << "term,coefficient\n";
    for (const auto& b : bucket_list(hf)) os << b.name << ',' << '"' << b.value->to_string() << "\"\n";
    return os.str();
}

std::string to_text(const HamiltonianForm& hf) {
    std::ostringstream os;
    if (hf.mode) os << "mode: " << map_mode_name(*hf.mode) << '\n';
    if (hf.shift_source)
        os << "momentum shift: pbar_x = (" << hf.shift_scale_x.to_string() << ") p_x, pbar_y = ("
           << hf.shift_scale_y.to_string() << ") p_y + (" << hf.shift_offset_y.to_string()
           << ")\n";
    static const char* shapes[] = {"p_x^2", "p_y^2", "x^2 + y^2", "x p_y - y p_x", "x", "p_y", "1"};
    int i = 0;
    for (const auto& b : bucket_list(hf)) {
        os << "  " << b.name << "  [" << shapes[i++] << "]  = " << b.value->to_string() << '\n';
    }
    if (!hf.residual.is_zero()) os << "  residual = " << hf.residual.to_string() << '\n';
    return os.str();
}

// --- NCBound ----------------------------------------------------------------

std::string to_json(const NCBound& b) {
    std::ostringstream os;
    os << "{\"variant\":" << quoted(planck_variant_name(b.variant))
       << ",\"delta\":" << format_double(b.delta) << ",\"xi_bound\":" << format_double(b.xi_bound)
       << ",\"theta_eta_bound\":"
       << (b.theta_eta_bound ? format_double(*b.theta_eta_bound) : std::string("null")) << '}';
    return os.str();
}

std::string to_csv(const NCBound& b) {
    std::ostringstream os;
    os << "variant,delta,xi_bound,theta_eta_bound\n";
    os << planck_variant_name(b.variant) << ',' << format_double(b.delta) << ','
       << format_double(b.xi_bound) << ','
       << (b.theta_eta_bound ? format_double(*b.theta_eta_bound) : std::string()) << '\n';
    return os.str();
}

std::string to_text(const NCBound& b) {
    std::ostringstream os;
    os << "deformation bound (variant " << planck_variant_name(b.variant)
       << ") from fractional level agreement " << format_double(b.delta) << ":\n";
    os << "  |xi| <= " << format_double(b.xi_bound) << '\n';
    if (b.theta_eta_bound)
        os << "  |theta eta| <= " << format_double(*b.theta_eta_bound) << " (J s)^2\n";
    return os.str();
}

} // namespace ncwell

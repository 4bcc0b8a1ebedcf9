// ncwell — command-line front end for the noncommutative gravitational-well
// toolkit.  Orchestrates the library pipelines and emits reports in text,
// JSON, or CSV.  All numeric formatting lives in the serialize module so that
// identical configurations produce byte-identical output.

#include "CLI11.hpp"

#include <ncwell/bopp.hpp>
#include <ncwell/conformance.hpp>
#include <ncwell/hamiltonian.hpp>
#include <ncwell/params.hpp>
#include <ncwell/perturbation.hpp>
#include <ncwell/property_suite.hpp>
#include <ncwell/serialize.hpp>
#include <ncwell/spectrum.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

struct RunConfig {
    std::string command;
    std::string mode = "full";
    std::string potential = "gravity";
    std::string format = "text";
    std::string variant = "simple";
    std::string particle;
    std::string out_path;
    double theta = 0.0;
    double eta = 0.0;
    double mass = ncwell::codata::neutron_mass;
    double g = ncwell::codata::standard_gravity;
    double k = 0.0;
    double q = 0.0;
    double B = 0.0;
    double hbar = ncwell::codata::hbar;
    double delta = 0.0;
    int levels = 5;
    int basis = 16;
};

ncwell::PhysicalParams make_params(const RunConfig& cfg) {
    ncwell::PhysicalParams p;
    p.m = cfg.mass;
    p.g = cfg.g;
    p.hbar = cfg.hbar;
    p.theta = cfg.theta;
    p.eta = cfg.eta;
    p.k = cfg.k;
    p.q = cfg.q;
    p.B = cfg.B;
    p.validate();
    return p;
}

// Oracle basis sizes for `perturb`: a short ascending ladder ending at the
// requested size, so the report shows the diagonalization converging.
std::vector<int> oracle_ladder(int basis) {
    std::vector<int> sizes;
    for (int candidate : {8, 12})
        if (candidate < basis) sizes.push_back(candidate);
    sizes.push_back(basis);
    return sizes;
}

std::string run_verify(const RunConfig& cfg) {
    auto reports = ncwell::full_conformance();
    auto suite = ncwell::run_property_suite();
    if (cfg.format == "json") return ncwell::to_json(reports, suite);
    if (cfg.format == "csv") return ncwell::to_csv(reports);
    return ncwell::to_text(reports, suite);
}

std::string run_transform(const RunConfig& cfg) {
    auto kind = ncwell::potential_kind_from_name(cfg.potential);
    auto mode = ncwell::map_mode_from_name(cfg.mode);
    auto h = ncwell::build_hamiltonian(kind);
    auto map = ncwell::BoppMap::aux_to_nc(mode);
    auto hf = ncwell::transform_hamiltonian(h, map);
    if (cfg.format == "json") return ncwell::to_json(hf);
    if (cfg.format == "csv") return ncwell::to_csv(hf);
    return ncwell::to_text(hf);
}

std::string run_spectrum(const RunConfig& cfg) {
    auto variant = ncwell::planck_variant_from_name(cfg.variant);
    auto p = make_params(cfg);
    auto table = ncwell::make_well_table(p, cfg.levels, variant);
    if (cfg.format == "json") return ncwell::to_json(table);
    if (cfg.format == "csv") return ncwell::to_csv(table);
    return ncwell::to_text(table);
}

std::string run_perturb(const RunConfig& cfg) {
    auto p = make_params(cfg);
    auto states = ncwell::complete_shells(2);
    auto report = ncwell::perturbation_shifts(p, states);
    ncwell::attach_oracle_deltas(report, p, oracle_ladder(cfg.basis));
    if (cfg.format == "json") return ncwell::to_json(report);
    if (cfg.format == "csv") return ncwell::to_csv(report);
    return ncwell::to_text(report);
}

std::string run_bounds(const RunConfig& cfg) {
    auto variant = ncwell::planck_variant_from_name(cfg.variant);
    auto p = make_params(cfg);
    auto bound = ncwell::nc_bound_from_measurement(cfg.delta, variant, p);
    if (cfg.format == "json") return ncwell::to_json(bound);
    if (cfg.format == "csv") return ncwell::to_csv(bound);
    return ncwell::to_text(bound);
}

void emit(const RunConfig& cfg, std::string payload) {
    if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot open output path '" + cfg.out_path + "'");
    out << payload;
    if (!out) throw std::runtime_error("emit: write failed for '" + cfg.out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"noncommutative gravitational-well toolkit"};
    app.name("ncwell");

    app.set_config("--config", "", "flat key=value configuration file (# comments); flags win on conflict")
        ->envname("NCWELL_CONFIG");

    app.add_option("--command", cfg.command, "command to run (alternative to the subcommand form)")
        ->check(CLI::IsMember({"verify", "transform", "spectrum", "perturb", "bounds"}));
    app.add_option("--mode", cfg.mode, "map mode")
        ->check(CLI::IsMember({"full", "space-only", "momentum-only", "commutative"}))
        ->capture_default_str();
    app.add_option("--potential", cfg.potential, "potential kind")
        ->check(CLI::IsMember({"gravity", "oscillator", "gravity-oscillator"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--variant", cfg.variant, "effective Planck-constant variant")
        ->check(CLI::IsMember({"simple", "general"}))
        ->capture_default_str();
    auto* particle_opt = app.add_option("--particle", cfg.particle,
                                        "particle preset for mass and charge")
                             ->check(CLI::IsMember({"neutron", "electron"}));
    app.add_option("--out", cfg.out_path, "write output to this path instead of stdout");

    app.add_option("--theta", cfg.theta, "space noncommutativity parameter [m^2]")->capture_default_str();
    app.add_option("--eta", cfg.eta, "momentum noncommutativity parameter [kg^2 m^2 s^-2]")->capture_default_str();
    auto* mass_opt = app.add_option("--mass", cfg.mass, "particle mass [kg]")->capture_default_str();
    app.add_option("--g", cfg.g, "gravitational acceleration [m s^-2]")->capture_default_str();
    app.add_option("--k", cfg.k, "harmonic constant [kg s^-2]")->capture_default_str();
    auto* charge_opt = app.add_option("--q", cfg.q, "electric charge [C]")->capture_default_str();
    app.add_option("--B", cfg.B, "magnetic field [T]")->capture_default_str();
    app.add_option("--hbar", cfg.hbar, "Planck constant over 2 pi [J s]")->capture_default_str();
    app.add_option("--delta", cfg.delta, "relative energy discrepancy for `bounds`")->capture_default_str();
    app.add_option("--levels", cfg.levels, "number of levels for `spectrum`")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    app.add_option("--basis", cfg.basis, "1D oscillator basis size for the `perturb` oracle")
        ->check(CLI::Range(4, 64))
        ->capture_default_str();

    std::string subcommand_choice;
    for (const auto& name : {"verify", "transform", "spectrum", "perturb", "bounds"}) {
        auto* sub = app.add_subcommand(name, std::string("run the ") + name + " command");
        sub->fallthrough();
        sub->callback([&subcommand_choice, name] { subcommand_choice = name; });
    }
    app.require_subcommand(0, 1);

    // A config-file `command=` must lose to an explicit subcommand (flags win
    // on conflict), so note whether --command itself appeared on the
    // command line before CLI11 merges config values in.
    bool command_flag_on_cli = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--command" || arg.rfind("--command=", 0) == 0) command_flag_on_cli = true;
    }

    try {
        app.parse(argc, argv);

        if (!subcommand_choice.empty()) {
            if (command_flag_on_cli && !cfg.command.empty() && cfg.command != subcommand_choice)
                throw std::invalid_argument("run: subcommand '" + subcommand_choice +
                                            "' conflicts with --command '" + cfg.command + "'");
            cfg.command = subcommand_choice;
        }
        if (cfg.command.empty())
            throw std::invalid_argument(
                "run: no command given (choose verify, transform, spectrum, perturb, or bounds)");

        // Particle presets fill in mass/charge only where the user did not
        // give an explicit value (flag or config key).
        if (particle_opt->count() > 0) {
            if (cfg.particle == "neutron") {
                if (mass_opt->count() == 0) cfg.mass = ncwell::codata::neutron_mass;
                if (charge_opt->count() == 0) cfg.q = 0.0;
            } else if (cfg.particle == "electron") {
                if (mass_opt->count() == 0) cfg.mass = ncwell::codata::electron_mass;
                if (charge_opt->count() == 0) cfg.q = -ncwell::codata::elementary_charge;
            }
        }

        std::string payload;
        if (cfg.command == "verify") payload = run_verify(cfg);
        else if (cfg.command == "transform") payload = run_transform(cfg);
        else if (cfg.command == "spectrum") payload = run_spectrum(cfg);
        else if (cfg.command == "perturb") payload = run_perturb(cfg);
        else payload = run_bounds(cfg);
        emit(cfg, payload);
        return 0;
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: cli: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "ncwell/perturbation.hpp"

#include "ncwell/diagonalize.hpp"
#include "ncwell/frequencies.hpp"
#include "ncwell/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncwell {

std::vector<std::pair<int, int>> complete_shells(int n_top) {
    if (n_top < 0) throw std::invalid_argument("complete_shells: n_top must be >= 0");
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= n_top; ++n)
        for (int m_l = -n; m_l <= n; m_l += 2) out.emplace_back(n, m_l);
    return out;
}

PerturbationReport perturbation_shifts(const PhysicalParams& p,
                                       const std::vector<std::pair<int, int>>& states) {
    p.validate();
    if (!(p.k > 0.0))
        throw std::domain_error("perturbation_shifts: k must be > 0 (oscillator basis undefined)");

    PerturbationReport report;
    report.v1_total = v1_coefficient(p);
    const double h2 = p.hbar * p.hbar;
    const double w2 = p.k / p.m;
    report.v2_px2 = p.m * w2 * p.theta * p.theta / (8.0 * h2) - p.theta * p.eta / (8.0 * h2);
    report.v2_x2 = p.eta * p.eta / (8.0 * p.m * h2);

    report.states.reserve(states.size());
    for (const auto& [n, m_l] : states) {
        require_circular_state(n, m_l);
        PerturbationState s;
        s.n = n;
        s.m_l = m_l;
        s.e0 = ho_energy(n, p);
        s.delta1 = report.v1_total * lz_expectation(n, m_l, p);
        s.delta1_printed = report.v1_total * xpy_expectation(n, m_l, p);
        s.delta2 = report.v2_px2 * px2_expectation(n, p) + report.v2_x2 * x2_expectation(n, p);
        s.e_first_order = s.e0 + s.delta1;
        report.states.push_back(s);
    }
    return report;
}

namespace {

void require_complete_shells(const std::vector<PerturbationState>& states) {
    int n_top = -1;
    for (const auto& s : states) n_top = std::max(n_top, s.n);
    auto expected = complete_shells(n_top);
    if (states.size() != expected.size())
        throw std::invalid_argument(
            "attach_oracle_deltas: states must form complete shells from the ground state up");
    std::vector<std::pair<int, int>> got;
    got.reserve(states.size());
    for (const auto& s : states) got.emplace_back(s.n, s.m_l);
    std::sort(got.begin(), got.end());
    if (got != expected)
        throw std::invalid_argument(
            "attach_oracle_deltas: states must form complete shells from the ground state up");
}

} // namespace

void attach_oracle_deltas(PerturbationReport& report, const PhysicalParams& p,
                          const std::vector<int>& basis_sizes) {
    if (basis_sizes.empty())
        throw std::invalid_argument("attach_oracle_deltas: need at least one basis size");
    require_complete_shells(report.states);

    const std::size_t count = report.states.size();
    // Sorted pairing: the perturbative energies in ascending order line up
    // with the lowest eigenvalues.
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.states[a].e_first_order < report.states[b].e_first_order;
    });

    report.oracle_basis_sizes.clear();
    report.oracle_max_deltas.clear();
    for (int basis : basis_sizes) {
        SpectrumResult oracle = diagonalize_oracle(p, basis);
        if (oracle.levels.size() < count)
            throw std::invalid_argument("attach_oracle_deltas: basis too small for "
                                        + std::to_string(count) + " states");
        double max_delta = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            PerturbationState& s = report.states[order[i]];
            const double eig = oracle.levels[i].energy_joule;
            const double delta = std::fabs(s.e_first_order - eig) / std::fabs(eig);
            s.oracle_delta = delta; // final pass (largest basis last) wins
            max_delta = std::max(max_delta, delta);
        }
        report.oracle_basis_sizes.push_back(basis);
        report.oracle_max_deltas.push_back(max_delta);
    }
}

} // namespace ncwell

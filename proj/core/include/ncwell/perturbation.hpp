#pragma once

#include "ncwell/params.hpp"

#include <utility>
#include <vector>

namespace ncwell {

/// Per-state perturbative data in the circular oscillator basis.
struct PerturbationState {
    int n = 0;
    int m_l = 0;
    double e0 = 0.0;             ///< hbar omega (n + 1), J
    double delta1 = 0.0;         ///< first-order shift of the Hermitian term: v1 hbar m_l
    double delta1_printed = 0.0; ///< x p_y fragment alone: v1 <x p_y> = v1 hbar m_l / 2
    double delta2 = 0.0;         ///< expectation of the quadratic correction terms
    double e_first_order = 0.0;  ///< e0 + delta1
    double oracle_delta = -1.0;  ///< |e_first_order - eigenvalue| / |eigenvalue|; -1 until attached
};

struct PerturbationReport {
    double v1_total = 0.0;  ///< eta/2m hbar - m omega^2 theta/2 hbar
    double v2_px2 = 0.0;    ///< m omega^2 theta^2/8 hbar^2 - theta eta/8 hbar^2
    double v2_x2 = 0.0;     ///< eta^2 / 8 m hbar^2
    std::vector<PerturbationState> states;
    std::vector<int> oracle_basis_sizes;    ///< filled by attach_oracle_deltas
    std::vector<double> oracle_max_deltas;  ///< max per-state delta at each basis size
};

/// All circular states of shells 0..n_top, ordered by (n, m_l).
std::vector<std::pair<int, int>> complete_shells(int n_top);

/// First-order shifts of the angular-momentum term (both the Hermitian
/// combination and the printed fragment) and the expectation of the
/// quadratic correction terms, per requested state.  Requires k > 0 and
/// valid circular quantum numbers.
PerturbationReport perturbation_shifts(const PhysicalParams& p,
                                       const std::vector<std::pair<int, int>>& states);

/// Compares e0 + delta1 against the finite-basis eigenvalues at each of
/// the given per-dimension basis sizes, filling oracle_delta per state
/// (from the largest basis) and oracle_max_deltas per size.  The states
/// must form complete shells from the ground state up so the sorted
/// pairing against the lowest eigenvalues is meaningful.
void attach_oracle_deltas(PerturbationReport& report, const PhysicalParams& p,
                          const std::vector<int>& basis_sizes);

} // namespace ncwell

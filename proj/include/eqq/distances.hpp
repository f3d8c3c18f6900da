// distances.hpp — The four distance-to-equilibrium measures and the
// coherence decomposition of the KL divergence.
//
// Entropic quantities are computed from eigenvalues only, with the
// 0*log 0 = 0 convention applied below kZeroClamp. The reversed and
// symmetrized KL divergences return +infinity (a comparable sentinel, not
// an error) when the state has an eigenvalue inside the clamp while the
// reference is full rank.

#pragma once

#include <string>
#include <vector>

#include "eqq/system.hpp"

namespace eqq {

enum class Measure { KL, Trace, ReversedKL, SymmetrizedKL };

// CLI / config names: "kl", "trace", "revkl", "symkl".
std::string measure_name(Measure m);
Measure parse_measure(const std::string& name);

// Distance from rho to the (full-rank) reference state rho_eq:
//   KL            Tr[rho (log rho - log rho_eq)]
//   Trace         (1/2) sum_i |lambda_i(rho - rho_eq)|
//   ReversedKL    Tr[rho_eq (log rho_eq - log rho)]
//   SymmetrizedKL (KL + ReversedKL) / 2
double distance(const DensityMatrix& rho, const DensityMatrix& rho_eq,
                Measure m);

// Von Neumann entropy -sum lambda log lambda (eigenvalue clamp applied).
double von_neumann_entropy(const DensityMatrix& rho);

struct KlSplit {
    double coherence_part; // S[rho_diag] - S[rho], >= 0
    double diagonal_part;  // KL(rho_diag || rho_eq)
};

// Splits KL(rho || rho_eq) into the relative entropy of coherence plus the
// population part; rho_diag zeroes the off-diagonals in the energy
// eigenbasis (the basis where rho_eq is diagonal). The two parts sum to
// distance(rho, rho_eq, KL) exactly.
KlSplit kl_coherence_split(const DensityMatrix& rho,
                           const DensityMatrix& rho_eq);

// D(beta0) = distance(thermal_state(sys, beta0), thermal_state(sys, beta))
// sampled over the grid.
std::vector<std::pair<double, double>> initial_distance_curve(
    const LevelSystem& sys, Measure m, const std::vector<double>& beta0_grid);

} // namespace eqq

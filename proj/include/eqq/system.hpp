// system.hpp — Physical model definitions: energy levels, detailed-balanced
// jump rates, dephasing, thermal and coherent initial states.
//
// Units: hbar = k_B = 1 throughout. Energies are angular frequencies, rates
// are inverse times, and beta*energy is dimensionless. Time is reported in
// units of 1/Gamma01 where Gamma01 is the downward rate between levels 0
// and 1 (the canonical rate, default 1).

#pragma once

#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "eqq/errors.hpp"
#include "eqq/numkernel.hpp"

namespace eqq {

// N x N complex Hermitian unit-trace PSD matrix holding the system state.
// Row/column index i corresponds to energy level i.
struct DensityMatrix {
    ComplexMatrix mat;

    Eigen::Index dim() const { return mat.rows(); }
};

inline constexpr double kDensityTol = 1e-10;

// Validates Hermiticity (1e-10), unit trace (1e-10) and smallest eigenvalue
// >= -1e-10; throws ValidationError otherwise.
DensityMatrix make_density(ComplexMatrix m, double tol = kDensityTol);

// Few-level system coupled to a bath at inverse temperature beta. Only
// downward rates (Gamma_ij for i<j, the rate of the j -> i transition) are
// stored; upward rates are derived from detailed balance
//   Gamma_ji = Gamma_ij * exp(-beta (eps_j - eps_i)),
// so the thermal state is stationary by construction. The undirected graph
// of nonzero rates must be connected (unique stationary state); this is
// checked at construction time.
class LevelSystem {
public:
    LevelSystem(std::vector<double> energies, Eigen::MatrixXd downward_rates,
                double beta, double dephasing = 0.0);

    // {"levels": [...], "beta": x, "rates": {"0-1": g01, ...},
    //  "dephasing": d}. Rate keys "i-j" require i < j.
    static LevelSystem from_json(const nlohmann::json& j);

    Eigen::Index size() const { return static_cast<Eigen::Index>(energies_.size()); }
    double energy(Eigen::Index i) const { return energies_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& energies() const { return energies_; }
    double beta() const { return beta_; }
    double dephasing() const { return dephasing_; }

    // Full rate of the j -> i transition (upward rates derived).
    double rate(Eigen::Index i, Eigen::Index j) const;
    // Stored downward rate, i < j.
    double downward_rate(Eigen::Index i, Eigen::Index j) const;

    // Gamma01, the time unit of every reported quench.
    double canonical_rate() const { return downward_rate(0, 1); }

    // Level splitting eps_1 - eps_0 (two-level convenience).
    double omega0() const;

private:
    std::vector<double> energies_;
    Eigen::MatrixXd down_; // down_(i,j) = Gamma_ij for i<j, zero elsewhere
    double beta_;
    double dephasing_;
};

// Canonical two-level system: energies (-omega0/2, +omega0/2).
LevelSystem two_level(double omega0, double beta, double gamma01 = 1.0,
                      double dephasing = 0.0);

// Three-level system with energies (0, omega1, omega2).
LevelSystem three_level(double omega1, double omega2, double beta,
                        double gamma01, double gamma02, double gamma12);

// Initial state with coherence for a two-level system:
// thermal populations at beta0 on the diagonal, r e^{+-i phi} off-diagonal.
struct CoherentInitialSpec {
    double beta0 = 0.0; // may be +-infinity (pure ground / excited limits)
    double r = 0.0;
    double phi = 0.0;
};

// Thermal populations at inverse temperature beta0 (two-level).
// p_excited = 1 / (1 + e^{beta0 * omega0}).
double thermal_population_excited(double beta0, double omega0);

// Bloch-sphere bound on the coherence: sqrt(p_ground * p_excited); states at
// the bound are pure.
double coherence_bound(double beta0, double omega0);

// Gibbs state exp(-beta_any H)/Z evaluated in the log domain (safe for
// |beta*eps| beyond exp overflow). beta_any = +inf gives the uniform mixture
// over the lowest level(s); -inf the mixture over the highest.
DensityMatrix thermal_state(const LevelSystem& sys, double beta_any);

// Two-level state with coherence. Throws ValidationError
// (CoherenceBoundViolated) when r exceeds the Bloch bound.
DensityMatrix coherent_state(const LevelSystem& sys,
                             const CoherentInitialSpec& spec);

struct DipoleRates {
    double gamma01; // downward
    double gamma10; // upward, = e^{-beta|omega0|} * gamma01
};

// Transition rates for a dipole coupling to a thermal electromagnetic field:
// Gamma01 = A |w|^3 e^{beta|w|} / (e^{beta|w|} - 1). Throws ValidationError
// (ZeroFrequency) for omega0 == 0.
DipoleRates dipole_rates(double amplitude, double omega0, double beta);

} // namespace eqq

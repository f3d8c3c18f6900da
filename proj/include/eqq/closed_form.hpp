// closed_form.hpp — Closed-form two-level solutions: exact rho(t), exact
// distance expressions, asymptotic laws, the normalized decay prefactor,
// the critical dephasing strength, and the equidistant-existence limits.
//
// These expressions are the independent oracle for the spectral propagator
// and the source of the asymptotic regime predictions.

#pragma once

#include "eqq/distances.hpp"
#include "eqq/system.hpp"

namespace eqq {

struct TwoLevelParams {
    double omega0 = 1.0;  // level splitting, > 0
    double beta = 1.0;    // ambient inverse temperature
    double beta0 = 1.0;   // initial inverse temperature
    double r = 0.0;       // initial coherence
    double phi = 0.0;     // coherence phase
    double gamma01 = 1.0; // downward rate
    double delta = 0.0;   // dephasing strength

    LevelSystem to_system() const {
        return two_level(omega0, beta, gamma01, delta);
    }
    CoherentInitialSpec initial_spec() const { return {beta0, r, phi}; }
};

// Population relaxation rate Gamma01 (1 + e^{-beta omega0}) = Gamma01 + Gamma10.
double population_rate(const TwoLevelParams& p);

// Exact state at time t >= 0: populations relax exponentially at
// population_rate, off-diagonals decay at population_rate/2 + delta while
// rotating at omega0.
DensityMatrix closed_form_state(const TwoLevelParams& p, double t);

// Two-term large-t asymptotic of the KL distance: a population term decaying
// at twice the population rate plus a coherence term decaying at
// population_rate + 2 delta.
double kl_asymptotic(const TwoLevelParams& p, double t);

// Normalized asymptotic amplitude of the thermal (r = 0) KL decay,
// monotonically decreasing in beta0 for fixed beta. Throws ValidationError
// (DegeneratePoint) at beta0 == beta where the ratio is 0/0.
double gamma_prefactor(double beta0, double beta, double omega0);

// Critical dephasing strength Gamma01 (1 + e^{-beta omega0}) / 2, the point
// where the coherence mode stops being the slowest.
double delta_critical(const TwoLevelParams& p);

// Exact trace distance to equilibrium at time t >= 0; for r = 0 it reduces
// to D_Tr(0) e^{-t * population_rate}, the same decay for every beta0.
double trace_closed_form(const TwoLevelParams& p, double t);

// KL distance of the thermal state at beta0 from equilibrium, evaluated in
// closed form (t = 0).
double kl_initial_thermal(double beta0, double beta, double omega0);

struct EquidistantExistence {
    double limit_hot;             // beta0 -> 0 value of the KL distance
    double limit_cold;            // beta0 -> inf value, log(1 + e^{-beta omega0})
    double pair_guaranteed_up_to; // min of the two limits
    bool cold_leq_hot;            // true iff beta*omega0/2 >= log 2
};

// Both finite endpoints of the thermal KL distance curve; a thermal
// equidistant pair exists whenever the target lies below both.
EquidistantExistence equidistant_existence(double beta, double omega0);

} // namespace eqq

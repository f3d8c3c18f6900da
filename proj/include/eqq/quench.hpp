// quench.hpp — Equidistant initial states, quench simulation, and
// classification of the relaxation asymmetry.
//
// Bisection is used throughout: the initial distance is monotone in beta0
// on each side of beta and monotone in r, so bracketing is unconditional.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqq/distances.hpp"
#include "eqq/closed_form.hpp"
#include "eqq/lindblad.hpp"
#include "eqq/system.hpp"

namespace eqq {

struct EquidistantPair {
    Measure measure;
    double target;     // D*
    double beta0_hot;  // < beta
    double beta0_cold; // > beta
    double d_hot;      // achieved distances
    double d_cold;
};

// Hot- and cold-side thermal states at the same initial distance D* from
// equilibrium. The hot bracket is [1e-4, beta], the cold bracket
// [beta, 50 beta]; targets beyond either endpoint value raise
// ValidationError (NoHotPartner / NoColdPartner). For two-level systems
// under KL the closed-form existence limits are checked first.
EquidistantPair find_equidistant_pair(const LevelSystem& sys, Measure m,
                                      double target);

// Equidistant curve in the (beta0, r) plane for a two-level system: for
// each beta0 whose thermal distance does not already exceed D*, the unique
// r with D(beta0, r) = D*. Grid points where even r_max undershoots the
// target are omitted; phi is fixed to 0.
std::vector<std::pair<double, double>> coherence_locus(
    const LevelSystem& sys, Measure m, double target,
    const std::vector<double>& beta0_grid);

struct QuenchRecord {
    std::vector<double> times;     // in units of 1/Gamma01, ascending
    std::vector<double> distances; // one per time
    Measure measure;
    std::string initial_state;
};

// Distance-to-equilibrium time series for one initial state: t = 0 plus
// `samples` geometrically spaced times from t_max/1000 to t_max (physical
// units; recorded times are multiplied by Gamma01).
QuenchRecord run_quench(const LevelSystem& sys, const DensityMatrix& rho0,
                        Measure m, double t_max, int samples,
                        const std::string& label = "");

enum class VerdictKind { UphillFaster, DownhillFaster, Symmetric };

std::string verdict_name(VerdictKind v);

struct Verdict {
    VerdictKind kind;
    double t_eval; // physical time of the comparison
    double gap;    // D_downhill(t_eval) - D_uphill(t_eval)
};

inline constexpr double kSymmetryTol = 1e-6;

// Compares the two quenches of `pair` at physical time t_eval under
// m_eval (which may differ from pair.measure for fixed-pair analyses).
// |gap| within sym_tol relative to the larger distance counts as Symmetric.
Verdict classify(const LevelSystem& sys, const EquidistantPair& pair,
                 Measure m_eval, double t_eval,
                 double sym_tol = kSymmetryTol);

// Same, reusing an existing spectral decomposition of the system.
Verdict classify_with(const SpectralDecomposition& dec, const LevelSystem& sys,
                      const EquidistantPair& pair, Measure m_eval,
                      double t_eval, double sym_tol = kSymmetryTol);

enum class Regime { BelowCritical, AtCritical, AboveCritical };
enum class Candidate { HotThermal, ColdThermal, Coherent };

std::string regime_name(Regime r);
std::string candidate_name(Candidate c);

// Asymptotic-regime analysis of the two-level equidistant states: which of
// the hot thermal, cold thermal, and maximally-coherent (beta0 = beta)
// states is predicted to thermalize fastest, and whether the simulated
// distances at t_eval agree.
struct RegimeReport {
    Measure measure;
    double target;
    double delta;
    double delta_c;
    Regime regime;
    double beta0_hot;
    double beta0_cold;
    double coherent_r; // locus value at beta0 = beta
    std::vector<Candidate> predicted_fastest; // ties allowed
    double d_hot, d_cold, d_coherent;         // simulated at t_eval
    std::vector<Candidate> observed_fastest;
    bool verified;
    double t_eval;
};

RegimeReport regime_report(const TwoLevelParams& p, Measure m, double target,
                           double t_eval_units = 10.0);

} // namespace eqq

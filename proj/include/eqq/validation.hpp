// validation.hpp — Self-contained oracle and property suites. Each suite
// draws seeded random instances, checks an exact identity or an independent
// second computation, and reports the worst deviation seen.
//
// The dense matrix-exponential route is deliberately separate from the
// spectral propagator it cross-checks.

#pragma once

#include <string>
#include <vector>

#include "eqq/lindblad.hpp"

namespace eqq {

struct SuiteResult {
    std::string name;
    bool passed;
    double worst;     // worst deviation observed
    double tolerance; // limit it was held to
    std::string detail;
};

// Dense matrix exponential (scaling-and-squaring), independent of the
// spectral decomposition path.
ComplexMatrix expm_dense(const ComplexMatrix& a);

// rho(t) by exponentiating the full superoperator; the oracle counterpart
// of propagate().
DensityMatrix propagate_expm(const Superoperator& sop,
                             const DensityMatrix& rho0, double t);

// Seeded random density matrix of dimension n.
DensityMatrix random_density(int n, unsigned long long seed);

// Individual suites (all deterministic).
SuiteResult suite_spectral_vs_closed_form(int draws = 100, int times = 5,
                                          double tol = 1e-10);
SuiteResult suite_spectral_vs_expm(double tol = 1e-9);
SuiteResult suite_trace_symmetry(int sampled_times = 50, double tol = 1e-10);
SuiteResult suite_semigroup(double tol = 1e-9);
SuiteResult suite_trace_preservation_positivity(double trace_tol = 1e-9,
                                                double psd_tol = 1e-8);
SuiteResult suite_distance_monotonicity(double tol = 1e-10);
SuiteResult suite_pinsker_bound();
SuiteResult suite_phase_invariance(double tol = 1e-10);
SuiteResult suite_detailed_balance_stationarity(double tol = 1e-12);
SuiteResult suite_gamma_monotonicity(int grid_points = 200);
SuiteResult suite_dipole_rates();

// Every suite above, in a fixed order.
std::vector<SuiteResult> run_all_suites();

} // namespace eqq

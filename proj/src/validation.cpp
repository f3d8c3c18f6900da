// validation.cpp — oracle and property suites.

#include "eqq/validation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "eqq/closed_form.hpp"
#include "eqq/distances.hpp"
#include "eqq/quench.hpp"

namespace eqq {

namespace {

constexpr unsigned long long kBaseSeed = 0x5eed2024ull;

TwoLevelParams random_two_level(std::mt19937_64& rng, bool with_coherence) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TwoLevelParams p;
    p.omega0 = 0.3 + 2.0 * u(rng);
    p.beta = 0.2 + 2.0 * u(rng);
    p.beta0 = 0.05 + 3.0 * u(rng);
    p.gamma01 = 0.3 + 2.0 * u(rng);
    p.delta = u(rng) < 0.5 ? 0.0 : 1.5 * u(rng);
    if (with_coherence) {
        p.r = u(rng) * 0.95 * coherence_bound(p.beta0, p.omega0);
        p.phi = 2.0 * std::numbers::pi * u(rng);
    }
    return p;
}

LevelSystem random_three_level(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return three_level(0.4 + u(rng), 1.5 + u(rng), 0.3 + 1.5 * u(rng),
                       0.5 + u(rng), 0.2 + 2.0 * u(rng), 0.2 + 2.0 * u(rng));
}

SuiteResult make_result(const std::string& name, double worst, double tol,
                        const std::string& detail = "") {
    return {name, worst <= tol, worst, tol, detail};
}

} // namespace

ComplexMatrix expm_dense(const ComplexMatrix& a) {
    return a.exp();
}

DensityMatrix propagate_expm(const Superoperator& sop,
                             const DensityMatrix& rho0, double t) {
    if (t < 0.0) {
        throw ValidationError("propagate_expm: NegativeTime");
    }
    const ComplexMatrix prop = expm_dense(ComplexMatrix(sop.mat * t));
    const Eigen::VectorXcd v = prop * vectorize(rho0.mat);
    ComplexMatrix m = unvectorize(v, sop.hilbert_dim);
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    return DensityMatrix{std::move(sym)};
}

DensityMatrix random_density(int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    }
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix{std::move(rho)};
}

SuiteResult suite_spectral_vs_closed_form(int draws, int times, double tol) {
    std::mt19937_64 rng(kBaseSeed + 1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int d = 0; d < draws; ++d) {
        const TwoLevelParams p = random_two_level(rng, true);
        const LevelSystem sys = p.to_system();
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const DensityMatrix rho0 = coherent_state(sys, p.initial_spec());
        for (int k = 0; k < times; ++k) {
            const double t = (0.01 + 10.0 * u(rng)) / p.gamma01;
            const DensityMatrix exact = closed_form_state(p, t);
            const DensityMatrix spectral = propagate(dec, rho0, t);
            worst = std::max(worst, max_abs(exact.mat - spectral.mat));
        }
    }
    return make_result("spectral_vs_closed_form", worst, tol);
}

SuiteResult suite_spectral_vs_expm(double tol) {
    std::mt19937_64 rng(kBaseSeed + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int d = 0; d < 20; ++d) {
        const bool two = d % 2 == 0;
        const LevelSystem sys =
            two ? random_two_level(rng, false).to_system() : random_three_level(rng);
        const Superoperator sop = build_superoperator(sys);
        const SpectralDecomposition dec = decompose(sop);
        const DensityMatrix rho0 =
            random_density(static_cast<int>(sys.size()), kBaseSeed + 100 + d);
        for (double t : {0.05, 0.5, 2.0, 8.0}) {
            const DensityMatrix a = propagate(dec, rho0, t);
            const DensityMatrix b = propagate_expm(sop, rho0, t);
            worst = std::max(worst, max_abs(a.mat - b.mat));
        }
    }
    return make_result("spectral_vs_matrix_exponential", worst, tol);
}

SuiteResult suite_trace_symmetry(int sampled_times, double tol) {
    // Trace-equidistant thermal pairs relax at exactly the same pace.
    const LevelSystem sys = two_level(1.0, 1.0);
    const EquidistantPair pair =
        find_equidistant_pair(sys, Measure::Trace, 0.1);
    const SpectralDecomposition dec = decompose(build_superoperator(sys));
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    const DensityMatrix cold0 = thermal_state(sys, pair.beta0_cold);
    const DensityMatrix hot0 = thermal_state(sys, pair.beta0_hot);

    double worst = 0.0;
    for (int k = 0; k < sampled_times; ++k) {
        const double t = 20.0 * (k + 1) / sampled_times;
        const double d_cold =
            distance(propagate(dec, cold0, t), rho_eq, Measure::Trace);
        const double d_hot =
            distance(propagate(dec, hot0, t), rho_eq, Measure::Trace);
        worst = std::max(worst, std::abs(d_cold - d_hot));
    }
    return make_result("trace_equidistant_symmetry", worst, tol);
}

SuiteResult suite_semigroup(double tol) {
    std::mt19937_64 rng(kBaseSeed + 3);
    double worst = 0.0;
    for (int d = 0; d < 10; ++d) {
        const LevelSystem sys = d % 2 == 0
                                    ? random_two_level(rng, false).to_system()
                                    : random_three_level(rng);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const DensityMatrix rho0 =
            random_density(static_cast<int>(sys.size()), kBaseSeed + 200 + d);
        for (auto [t1, t2] : {std::pair{0.3, 0.7}, {1.0, 2.5}, {0.05, 6.0}}) {
            const DensityMatrix direct = propagate(dec, rho0, t1 + t2);
            const DensityMatrix stepped =
                propagate(dec, propagate(dec, rho0, t1), t2);
            worst = std::max(worst, max_abs(direct.mat - stepped.mat));
        }
    }
    return make_result("semigroup_composition", worst, tol);
}

SuiteResult suite_trace_preservation_positivity(double trace_tol,
                                                double psd_tol) {
    std::mt19937_64 rng(kBaseSeed + 4);
    // Both deviations normalized by their own tolerance; 1.0 is the limit.
    double worst = 0.0;
    for (int d = 0; d < 10; ++d) {
        const LevelSystem sys = d % 2 == 0
                                    ? random_two_level(rng, false).to_system()
                                    : random_three_level(rng);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const DensityMatrix rho0 =
            random_density(static_cast<int>(sys.size()), kBaseSeed + 300 + d);
        for (double t : {0.0, 0.01, 0.3, 1.0, 4.0, 20.0}) {
            const DensityMatrix rho = propagate(dec, rho0, t);
            const double trace_err = std::abs(rho.mat.trace().real() - 1.0) +
                                     std::abs(rho.mat.trace().imag());
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat,
                                                            Eigen::EigenvaluesOnly);
            const double psd_viol = std::max(0.0, -es.eigenvalues()(0));
            worst = std::max({worst, trace_err / trace_tol, psd_viol / psd_tol});
        }
    }
    return {"trace_preservation_positivity", worst <= 1.0, worst, 1.0,
            "deviations normalized by trace/PSD tolerances"};
}

SuiteResult suite_distance_monotonicity(double tol) {
    std::mt19937_64 rng(kBaseSeed + 5);
    double worst = 0.0;
    for (int d = 0; d < 6; ++d) {
        const LevelSystem sys = d % 2 == 0
                                    ? random_two_level(rng, false).to_system()
                                    : random_three_level(rng);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
        const DensityMatrix rho0 =
            random_density(static_cast<int>(sys.size()), kBaseSeed + 400 + d);
        for (const Measure m : {Measure::KL, Measure::Trace,
                                Measure::ReversedKL, Measure::SymmetrizedKL}) {
            double prev = distance(rho0, rho_eq, m);
            for (int k = 1; k <= 24; ++k) {
                const double t = 0.25 * k;
                const double cur =
                    distance(propagate(dec, rho0, t), rho_eq, m);
                if (std::isinf(prev) && std::isinf(cur)) continue;
                if (std::isfinite(prev) && std::isfinite(cur)) {
                    worst = std::max(worst, cur - prev);
                }
                prev = cur;
            }
        }
    }
    return make_result("distance_monotone_contraction", worst, tol);
}

SuiteResult suite_pinsker_bound() {
    std::mt19937_64 rng(kBaseSeed + 6);
    double worst = 0.0; // violation magnitude of KL >= 2 DTr^2
    for (int d = 0; d < 40; ++d) {
        const LevelSystem sys = d % 2 == 0
                                    ? random_two_level(rng, false).to_system()
                                    : random_three_level(rng);
        const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
        const DensityMatrix rho =
            random_density(static_cast<int>(sys.size()), kBaseSeed + 500 + d);
        const double kl = distance(rho, rho_eq, Measure::KL);
        const double tr = distance(rho, rho_eq, Measure::Trace);
        worst = std::max(worst, 2.0 * tr * tr - kl);
    }
    return make_result("pinsker_bound", worst, 1e-12);
}

SuiteResult suite_phase_invariance(double tol) {
    const LevelSystem sys = two_level(1.0, 1.0);
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    double worst = 0.0;
    for (const Measure m : {Measure::KL, Measure::Trace, Measure::ReversedKL,
                            Measure::SymmetrizedKL}) {
        for (double beta0 : {0.5, 1.7}) {
            const double r = 0.6 * coherence_bound(beta0, 1.0);
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (int k = 0; k < 12; ++k) {
                const double phi = 2.0 * std::numbers::pi * k / 12.0;
                const double d =
                    distance(coherent_state(sys, {beta0, r, phi}), rho_eq, m);
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            worst = std::max(worst, hi - lo);
        }
    }
    return make_result("phase_invariance", worst, tol);
}

SuiteResult suite_detailed_balance_stationarity(double tol) {
    std::mt19937_64 rng(kBaseSeed + 7);
    double worst = 0.0;
    for (int d = 0; d < 10; ++d) {
        const LevelSystem sys = d % 2 == 0
                                    ? random_two_level(rng, false).to_system()
                                    : random_three_level(rng);
        // Detailed balance identity on the derived rates.
        for (Eigen::Index i = 0; i < sys.size(); ++i) {
            for (Eigen::Index j = 0; j < sys.size(); ++j) {
                if (i == j) continue;
                const double lhs =
                    sys.rate(i, j) * std::exp(-sys.beta() * sys.energy(j));
                const double rhs =
                    sys.rate(j, i) * std::exp(-sys.beta() * sys.energy(i));
                const double scale = std::max({lhs, rhs, 1e-300});
                worst = std::max(worst, std::abs(lhs - rhs) / scale);
            }
        }
        // The Gibbs state is a null vector of the generator.
        const Superoperator sop = build_superoperator(sys);
        const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
        worst = std::max(
            worst, (sop.mat * vectorize(rho_eq.mat)).cwiseAbs().maxCoeff());
    }
    return make_result("detailed_balance_stationarity", worst, tol);
}

SuiteResult suite_gamma_monotonicity(int grid_points) {
    double prev = gamma_prefactor(0.05, 1.0, 1.0);
    double worst = -1.0; // largest (non-negative means violation) increase
    for (int k = 1; k < grid_points; ++k) {
        const double beta0 = 0.05 + (3.0 - 0.05) * k / (grid_points - 1);
        if (beta0 == 1.0) continue;
        const double cur = gamma_prefactor(beta0, 1.0, 1.0);
        worst = std::max(worst, cur - prev);
        prev = cur;
    }
    return {"gamma_prefactor_monotone_decrease", worst < 0.0, worst, 0.0,
            "largest consecutive increase (must be negative)"};
}

SuiteResult suite_dipole_rates() {
    double worst = 0.0;
    for (double beta : {0.3, 1.0, 2.5}) {
        for (double w : {0.5, 1.0, 3.0}) {
            const DipoleRates rates = dipole_rates(0.7, w, beta);
            const double expected = std::exp(-beta * w);
            worst = std::max(worst,
                             std::abs(rates.gamma10 / rates.gamma01 - expected));
        }
    }
    // Direct value: A = 1, w = 1, beta = 1 gives e / (e - 1).
    const DipoleRates unit = dipole_rates(1.0, 1.0, 1.0);
    worst = std::max(worst, std::abs(unit.gamma01 - std::numbers::e /
                                                        (std::numbers::e - 1.0)));
    return make_result("dipole_rates_detailed_balance", worst, 1e-12);
}

std::vector<SuiteResult> run_all_suites() {
    return {
        suite_spectral_vs_closed_form(),
        suite_spectral_vs_expm(),
        suite_trace_symmetry(),
        suite_semigroup(),
        suite_trace_preservation_positivity(),
        suite_distance_monotonicity(),
        suite_pinsker_bound(),
        suite_phase_invariance(),
        suite_detailed_balance_stationarity(),
        suite_gamma_monotonicity(),
        suite_dipole_rates(),
    };
}

} // namespace eqq

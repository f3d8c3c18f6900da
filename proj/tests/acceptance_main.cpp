// acceptance_main.cpp — end-to-end acceptance suite. One line per criterion;
// exits nonzero if any criterion fails. Tolerances are pinned here, not
// configurable.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "eqq/csvio.hpp"
#include "eqq/phasemap.hpp"
#include "eqq/quench.hpp"
#include "eqq/validation.hpp"

using namespace eqq;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(std::string name)
        : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            failed_ = true;
            notes_ += (notes_.empty() ? "" : "; ") + what;
        }
    }

    void require_close(double got, double expected, double abs_tol,
                       const std::string& what) {
        const double err = std::abs(got - expected);
        if (!(err <= abs_tol)) {
            failed_ = true;
            notes_ += (notes_.empty() ? "" : "; ") + what + " got " +
                      std::to_string(got) + " expected " +
                      std::to_string(expected) + " (|err| " +
                      std::to_string(err) + " > " + std::to_string(abs_tol) +
                      ")";
        }
    }

    void require_runtime(double limit_s) {
        const double t = elapsed_s();
        if (t >= limit_s) {
            failed_ = true;
            notes_ += (notes_.empty() ? "" : "; ") + std::string("runtime ") +
                      std::to_string(t) + " s exceeds " +
                      std::to_string(limit_s) + " s";
        }
    }

    ~Criterion() {
        const double t = elapsed_s();
        if (failed_) {
            ++g_failures;
            std::cout << "[FAIL] " << name_ << " (" << t << " s)";
            if (!notes_.empty()) std::cout << " — " << notes_;
            std::cout << '\n';
        } else {
            std::cout << "[PASS] " << name_ << " (" << t << " s)";
            if (!notes_.empty()) std::cout << " — " << notes_;
            std::cout << '\n';
        }
    }

    void note(const std::string& text) {
        notes_ += (notes_.empty() ? "" : "; ") + text;
    }

private:
    std::string name_;
    std::chrono::steady_clock::time_point start_;
    bool failed_ = false;
    std::string notes_;
};

void criterion_1_two_level_pair() {
    Criterion c("criterion 1: two-level KL equidistant pair (0.084, 2.306)");
    const LevelSystem sys = two_level(1.0, 1.0);
    const EquidistantPair pair = find_equidistant_pair(sys, Measure::KL, 0.1);
    c.require_close(pair.beta0_hot, 0.084, 5e-3, "beta0_hot");
    c.require_close(pair.beta0_cold, 2.306, 5e-3, "beta0_cold");
    c.require_runtime(1.0);
}

void criterion_2_coherent_state() {
    Criterion c("criterion 2: coherent equidistant state r = 0.210 at beta0 = beta");
    const LevelSystem sys = two_level(1.0, 1.0);
    const auto locus = coherence_locus(sys, Measure::KL, 0.1, {1.0});
    c.require(locus.size() == 1, "locus point at beta0 = beta missing");
    if (!locus.empty()) {
        c.require_close(locus.front().second, 0.210, 5e-3, "r");
    }
    c.require_runtime(1.0);
}

void criterion_3_three_level_pairs() {
    Criterion c("criterion 3: three-level pairs KL (0.40, 1.90), trace (0.67, 1.40)");
    const LevelSystem sys = three_level(1.0, 2.0, 1.0, 1.0, 1.0, 1.0);
    const EquidistantPair kl = find_equidistant_pair(sys, Measure::KL, 0.1);
    c.require_close(kl.beta0_hot, 0.40, 5e-3, "KL beta0_hot");
    c.require_close(kl.beta0_cold, 1.90, 5e-3, "KL beta0_cold");
    const EquidistantPair tr = find_equidistant_pair(sys, Measure::Trace, 0.1);
    c.require_close(tr.beta0_hot, 0.67, 5e-3, "trace beta0_hot");
    c.require_close(tr.beta0_cold, 1.40, 5e-3, "trace beta0_cold");
    c.require_runtime(1.0);
}

void criterion_4_region_cells() {
    Criterion c("criterion 4: region verdicts at the three reference cells");
    struct Case {
        double x, y;
        VerdictKind kl, trace;
        const char* label;
    };
    const std::vector<Case> cases = {
        {0.0, 1.0, VerdictKind::UphillFaster, VerdictKind::UphillFaster,
         "cascade (region A)"},
        {2.0, 0.0, VerdictKind::DownhillFaster, VerdictKind::DownhillFaster,
         "V (region B)"},
        {1.1, 1.5, VerdictKind::UphillFaster, VerdictKind::DownhillFaster,
         "triangle (region C)"},
    };
    for (const Case& cs : cases) {
        const LevelSystem sys = three_level(1.0, 2.0, 1.0, 1.0, cs.x, cs.y);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const EquidistantPair kl_pair =
            find_equidistant_pair(sys, Measure::KL, 0.1);
        const EquidistantPair tr_pair =
            find_equidistant_pair(sys, Measure::Trace, 0.1);
        const Verdict vk = classify_with(dec, sys, kl_pair, Measure::KL, 10.0);
        const Verdict vt = classify_with(dec, sys, tr_pair, Measure::Trace, 10.0);
        c.require(vk.kind == cs.kl,
                  std::string(cs.label) + " KL verdict " + verdict_name(vk.kind));
        c.require(vt.kind == cs.trace, std::string(cs.label) +
                                           " trace verdict " +
                                           verdict_name(vt.kind));
    }
    c.require_runtime(5.0);
}

void criterion_5_trace_symmetry() {
    Criterion c("criterion 5: trace-equidistant pairs relax symmetrically");
    const SuiteResult res = suite_trace_symmetry(50, 1e-10);
    c.require(res.passed, "worst |D_cold - D_hot| = " + std::to_string(res.worst));
}

void criterion_6_oracle_equivalence() {
    Criterion c("criterion 6: spectral vs closed-form vs matrix-exponential");
    std::mt19937_64 rng(0xacce97ull);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        TwoLevelParams p;
        p.omega0 = 0.4 + 2.0 * u(rng);
        p.beta = 0.2 + 2.0 * u(rng);
        p.beta0 = 0.05 + 3.0 * u(rng);
        p.gamma01 = 0.3 + 2.0 * u(rng);
        p.delta = u(rng) < 0.4 ? 0.0 : 1.2 * u(rng);
        p.r = u(rng) * 0.9 * coherence_bound(p.beta0, p.omega0);
        p.phi = 2.0 * 3.14159265358979 * u(rng);

        const LevelSystem sys = p.to_system();
        const Superoperator sop = build_superoperator(sys);
        const SpectralDecomposition dec = decompose(sop);
        const DensityMatrix rho0 = coherent_state(sys, p.initial_spec());
        for (int k = 0; k < 5; ++k) {
            const double t = (0.02 + 8.0 * u(rng)) / p.gamma01;
            const ComplexMatrix a = propagate(dec, rho0, t).mat;
            const ComplexMatrix b = closed_form_state(p, t).mat;
            const ComplexMatrix e = propagate_expm(sop, rho0, t).mat;
            worst = std::max({worst, max_abs(a - b), max_abs(a - e),
                              max_abs(b - e)});
        }
    }
    c.note("max entrywise difference " + std::to_string(worst));
    c.require(worst <= 1e-10, "exceeds 1e-10");
    c.require_runtime(10.0);
}

void criterion_7_gamma_monotone() {
    Criterion c("criterion 7: gamma prefactor strictly decreasing on [0.05, 3]");
    double prev = gamma_prefactor(0.05, 1.0, 1.0);
    bool strict = true;
    for (int k = 1; k < 200; ++k) {
        const double beta0 = 0.05 + (3.0 - 0.05) * k / 199.0;
        const double cur = gamma_prefactor(beta0, 1.0, 1.0);
        if (!(cur - prev < 0.0)) strict = false;
        prev = cur;
    }
    c.require(strict, "a consecutive difference was not negative");
}

void criterion_8_regime_predictions() {
    Criterion c("criterion 8: fastest equidistant state per dephasing regime");

    // Delta = 0 < Delta_c: the cold thermal state leads under KL.
    TwoLevelParams p;
    const RegimeReport below = regime_report(p, Measure::KL, 0.1);
    c.require(below.d_cold < below.d_hot && below.d_cold < below.d_coherent,
              "delta = 0: cold thermal is not the closest at t Gamma01 = 10");

    // Delta = 2 Delta_c: the coherent state leads under both measures.
    TwoLevelParams above = p;
    above.delta = 2.0 * delta_critical(p);
    for (const Measure m : {Measure::KL, Measure::Trace}) {
        const RegimeReport rep = regime_report(above, m, 0.1);
        c.require(rep.d_coherent < rep.d_hot && rep.d_coherent < rep.d_cold,
                  "delta = 2 delta_c: coherent state is not the closest under " +
                      measure_name(m));
    }
}

void criterion_9_property_suite() {
    Criterion c("criterion 9: property suite (no figure-derived inputs)");
    for (const SuiteResult& res :
         {suite_trace_preservation_positivity(), suite_semigroup(),
          suite_distance_monotonicity(), suite_pinsker_bound(),
          suite_phase_invariance(), suite_detailed_balance_stationarity()}) {
        c.require(res.passed, res.name + " failed (worst " +
                                  std::to_string(res.worst) + ")");
    }
}

void criterion_10_full_phase_diagram() {
    Criterion c("criterion 10: full 61x61 phase diagram + fixed-pair variant");

    SweepSpec spec;
    spec.measures = {Measure::KL, Measure::Trace, Measure::ReversedKL,
                     Measure::SymmetrizedKL};

    const auto t0 = std::chrono::steady_clock::now();
    const PhaseDiagram per_measure = sweep_serial(spec);

    SweepSpec fixed = spec;
    fixed.pairing = Pairing::FixedPair;
    fixed.fixed_measure = Measure::KL;
    const PhaseDiagram fixed_pair = sweep_serial(fixed);
    const double single_thread_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    c.note("single-threaded sweeps " + std::to_string(single_thread_s) + " s");
    c.require(single_thread_s < 600.0, "single-threaded budget exceeded");

    // Byte-identical output across worker counts.
    const std::string reference = phase_csv(per_measure);
    c.require(reference == phase_csv(sweep(spec, 2)),
              "per-measure CSV differs at jobs=2");
    c.require(reference == phase_csv(sweep(spec, 8)),
              "per-measure CSV differs at jobs=8");
    const std::string fixed_ref = phase_csv(fixed_pair);
    c.require(fixed_ref == phase_csv(sweep(fixed, 4)),
              "fixed-pair CSV differs at jobs=4");

    c.note("fixed-pair unanimous fraction " +
           std::to_string(fixed_pair.unanimous_fraction));
    c.require(fixed_pair.unanimous_fraction > 0.95,
              "unanimous fraction at or below 0.95");
    c.require_runtime(600.0);
}

} // namespace

int main() {
    criterion_1_two_level_pair();
    criterion_2_coherent_state();
    criterion_3_three_level_pairs();
    criterion_4_region_cells();
    criterion_5_trace_symmetry();
    criterion_6_oracle_equivalence();
    criterion_7_gamma_monotone();
    criterion_8_regime_predictions();
    criterion_9_property_suite();
    criterion_10_full_phase_diagram();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

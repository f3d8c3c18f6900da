// quench.cpp — equidistant pair search, quench records, classification.

#include "eqq/quench.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace eqq {

namespace {

constexpr double kBeta0Floor = 1e-4;
constexpr double kColdCapFactor = 50.0;
constexpr int kMaxBisectIter = 200;
constexpr double kResidualTol = 1e-10;

// Bisect a monotone f over [lo, hi] for f(x) = target. `increasing` gives
// the direction of f. Converges on |f - target| <= kResidualTol or after
// kMaxBisectIter halvings.
double bisect_monotone(const std::function<double(double)>& f, double lo,
                       double hi, double target, bool increasing) {
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxBisectIter; ++it) {
        mid = 0.5 * (lo + hi);
        const double value = f(mid);
        if (std::abs(value - target) <= kResidualTol) return mid;
        const bool above = value > target;
        if (above == increasing) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return mid;
}

} // namespace

EquidistantPair find_equidistant_pair(const LevelSystem& sys, Measure m,
                                      double target) {
    if (target < 0.0 || !std::isfinite(target)) {
        throw ValidationError("find_equidistant_pair: D* must be >= 0 and finite");
    }
    const double beta = sys.beta();
    if (!(beta > 0.0)) {
        throw ValidationError(
            "find_equidistant_pair: requires a finite-temperature bath (beta > 0)");
    }
    if (target == 0.0) {
        return {m, 0.0, beta, beta, 0.0, 0.0};
    }

    const DensityMatrix rho_eq = thermal_state(sys, beta);
    auto dist_at = [&](double beta0) {
        return distance(thermal_state(sys, beta0), rho_eq, m);
    };

    const double hot_floor = kBeta0Floor;
    const double cold_cap = kColdCapFactor * beta;

    // Two-level KL: closed-form existence limits are available and tighter
    // than the bracket endpoints.
    if (sys.size() == 2 && m == Measure::KL) {
        const auto limits = equidistant_existence(beta, sys.omega0());
        if (target > limits.limit_hot) {
            std::ostringstream msg;
            msg << "find_equidistant_pair: NoHotPartner (D*=" << target
                << " exceeds the beta0 -> 0 limit " << limits.limit_hot << ")";
            throw ValidationError(msg.str());
        }
        if (target > limits.limit_cold) {
            std::ostringstream msg;
            msg << "find_equidistant_pair: NoColdPartner (D*=" << target
                << " exceeds the beta0 -> inf limit " << limits.limit_cold << ")";
            throw ValidationError(msg.str());
        }
    }

    const double d_hot_end = dist_at(hot_floor);
    if (target > d_hot_end) {
        std::ostringstream msg;
        msg << "find_equidistant_pair: NoHotPartner (D*=" << target
            << " exceeds D(beta0=" << hot_floor << ")=" << d_hot_end << ")";
        throw ValidationError(msg.str());
    }
    const double d_cold_end = dist_at(cold_cap);
    if (target > d_cold_end) {
        std::ostringstream msg;
        msg << "find_equidistant_pair: NoColdPartner (D*=" << target
            << " exceeds D(beta0=" << cold_cap << ")=" << d_cold_end << ")";
        throw ValidationError(msg.str());
    }

    // D(beta0) decreases toward beta on the hot side and increases past it
    // on the cold side.
    EquidistantPair pair;
    pair.measure = m;
    pair.target = target;
    pair.beta0_hot = bisect_monotone(dist_at, hot_floor, beta, target,
                                     /*increasing=*/false);
    pair.beta0_cold = bisect_monotone(dist_at, beta, cold_cap, target,
                                      /*increasing=*/true);
    pair.d_hot = dist_at(pair.beta0_hot);
    pair.d_cold = dist_at(pair.beta0_cold);

    if (std::abs(pair.d_hot - target) > 1e-9 ||
        std::abs(pair.d_cold - target) > 1e-9) {
        throw NumericalError(
            "find_equidistant_pair: NotBracketed (bisection residual above "
            "1e-9; initial distance not monotone on the bracket)");
    }
    return pair;
}

std::vector<std::pair<double, double>> coherence_locus(
    const LevelSystem& sys, Measure m, double target,
    const std::vector<double>& beta0_grid) {
    if (sys.size() != 2) {
        throw ValidationError("coherence_locus: two-level systems only");
    }
    if (!(target > 0.0)) {
        throw ValidationError("coherence_locus: D* must be > 0");
    }
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    const double omega0 = sys.omega0();

    std::vector<std::pair<double, double>> locus;
    for (double beta0 : beta0_grid) {
        auto dist_at_r = [&](double r) {
            return distance(coherent_state(sys, {beta0, r, 0.0}), rho_eq, m);
        };
        if (dist_at_r(0.0) > target) continue; // already too far at r = 0
        const double r_max = coherence_bound(beta0, omega0);
        const double d_top = dist_at_r(r_max);
        if (d_top < target) continue; // even a pure state undershoots
        locus.emplace_back(
            beta0, bisect_monotone(dist_at_r, 0.0, r_max, target,
                                   /*increasing=*/true));
    }
    return locus;
}

QuenchRecord run_quench(const LevelSystem& sys, const DensityMatrix& rho0,
                        Measure m, double t_max, int samples,
                        const std::string& label) {
    if (!(t_max > 0.0)) {
        throw ValidationError("run_quench: t_max must be > 0");
    }
    if (samples < 2) {
        throw ValidationError("run_quench: samples must be >= 2");
    }

    const SpectralDecomposition dec = decompose(build_superoperator(sys));
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    const double gamma01 = sys.canonical_rate();

    QuenchRecord rec;
    rec.measure = m;
    rec.initial_state = label;
    rec.times.reserve(static_cast<std::size_t>(samples) + 1);
    rec.distances.reserve(static_cast<std::size_t>(samples) + 1);

    rec.times.push_back(0.0);
    rec.distances.push_back(distance(rho0, rho_eq, m));

    const double t_lo = t_max / 1000.0;
    for (int k = 0; k < samples; ++k) {
        const double frac = samples == 1
                                ? 1.0
                                : static_cast<double>(k) / (samples - 1);
        const double t = t_lo * std::pow(t_max / t_lo, frac);
        rec.times.push_back(t * gamma01);
        rec.distances.push_back(distance(propagate(dec, rho0, t), rho_eq, m));
    }
    return rec;
}

std::string verdict_name(VerdictKind v) {
    switch (v) {
        case VerdictKind::UphillFaster: return "UphillFaster";
        case VerdictKind::DownhillFaster: return "DownhillFaster";
        case VerdictKind::Symmetric: return "Symmetric";
    }
    throw ValidationError("verdict_name: unknown verdict");
}

Verdict classify_with(const SpectralDecomposition& dec, const LevelSystem& sys,
                      const EquidistantPair& pair, Measure m_eval,
                      double t_eval, double sym_tol) {
    if (!(t_eval > 0.0)) {
        throw ValidationError("classify: t_eval must be > 0");
    }
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    const DensityMatrix up0 = thermal_state(sys, pair.beta0_cold);
    const DensityMatrix down0 = thermal_state(sys, pair.beta0_hot);

    const double d_up = distance(propagate(dec, up0, t_eval), rho_eq, m_eval);
    const double d_down = distance(propagate(dec, down0, t_eval), rho_eq, m_eval);

    Verdict v;
    v.t_eval = t_eval;
    v.gap = d_down - d_up;
    const double scale = std::max({d_down, d_up, 1e-300});
    if (std::abs(v.gap) <= sym_tol * scale) {
        v.kind = VerdictKind::Symmetric;
    } else {
        v.kind = v.gap > 0.0 ? VerdictKind::UphillFaster
                             : VerdictKind::DownhillFaster;
    }
    return v;
}

Verdict classify(const LevelSystem& sys, const EquidistantPair& pair,
                 Measure m_eval, double t_eval, double sym_tol) {
    const SpectralDecomposition dec = decompose(build_superoperator(sys));
    return classify_with(dec, sys, pair, m_eval, t_eval, sym_tol);
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::BelowCritical: return "BelowCritical";
        case Regime::AtCritical: return "AtCritical";
        case Regime::AboveCritical: return "AboveCritical";
    }
    throw ValidationError("regime_name: unknown regime");
}

std::string candidate_name(Candidate c) {
    switch (c) {
        case Candidate::HotThermal: return "HotThermal";
        case Candidate::ColdThermal: return "ColdThermal";
        case Candidate::Coherent: return "Coherent";
    }
    throw ValidationError("candidate_name: unknown candidate");
}

RegimeReport regime_report(const TwoLevelParams& p, Measure m, double target,
                           double t_eval_units) {
    const LevelSystem sys = p.to_system();
    const double delta_c = delta_critical(p);

    RegimeReport rep;
    rep.measure = m;
    rep.target = target;
    rep.delta = p.delta;
    rep.delta_c = delta_c;
    rep.t_eval = t_eval_units / p.gamma01;

    const double crit_tol = 1e-12 * std::max(1.0, delta_c);
    if (std::abs(p.delta - delta_c) <= crit_tol) {
        rep.regime = Regime::AtCritical;
    } else if (p.delta < delta_c) {
        rep.regime = Regime::BelowCritical;
    } else {
        rep.regime = Regime::AboveCritical;
    }

    const EquidistantPair pair = find_equidistant_pair(sys, m, target);
    rep.beta0_hot = pair.beta0_hot;
    rep.beta0_cold = pair.beta0_cold;

    // The coherent candidate sits at beta0 = beta on the equidistant locus.
    const auto locus = coherence_locus(sys, m, target, {p.beta});
    if (locus.empty()) {
        throw NumericalError(
            "regime_report: no coherent equidistant state at beta0 = beta");
    }
    rep.coherent_r = locus.front().second;

    // Asymptotic predictions per regime.
    switch (rep.regime) {
        case Regime::BelowCritical:
            if (m == Measure::Trace) {
                // Thermal pair decays symmetrically and faster than any
                // coherent state.
                rep.predicted_fastest = {Candidate::HotThermal,
                                         Candidate::ColdThermal};
            } else {
                rep.predicted_fastest = {Candidate::ColdThermal};
            }
            break;
        case Regime::AboveCritical:
            rep.predicted_fastest = {Candidate::Coherent};
            break;
        case Regime::AtCritical: {
            if (m == Measure::Trace) {
                // Every equidistant state shares the same decay.
                rep.predicted_fastest = {Candidate::HotThermal,
                                         Candidate::ColdThermal,
                                         Candidate::Coherent};
            } else {
                // All terms decay at the same rate; the combined prefactor
                // of the asymptotic expansion decides.
                TwoLevelParams hot = p;
                hot.beta0 = pair.beta0_hot;
                hot.r = 0.0;
                TwoLevelParams cold = p;
                cold.beta0 = pair.beta0_cold;
                cold.r = 0.0;
                TwoLevelParams coh = p;
                coh.beta0 = p.beta;
                coh.r = rep.coherent_r;
                const double pref_hot = kl_asymptotic(hot, 0.0);
                const double pref_cold = kl_asymptotic(cold, 0.0);
                const double pref_coh = kl_asymptotic(coh, 0.0);
                const double best = std::min({pref_hot, pref_cold, pref_coh});
                const double tie = 1e-9 * std::max(best, 1e-300);
                if (pref_hot <= best + tie)
                    rep.predicted_fastest.push_back(Candidate::HotThermal);
                if (pref_cold <= best + tie)
                    rep.predicted_fastest.push_back(Candidate::ColdThermal);
                if (pref_coh <= best + tie)
                    rep.predicted_fastest.push_back(Candidate::Coherent);
            }
            break;
        }
    }

    // Simulated comparison at t_eval.
    const SpectralDecomposition dec = decompose(build_superoperator(sys));
    const DensityMatrix rho_eq = thermal_state(sys, p.beta);
    const DensityMatrix hot0 = thermal_state(sys, pair.beta0_hot);
    const DensityMatrix cold0 = thermal_state(sys, pair.beta0_cold);
    const DensityMatrix coh0 =
        coherent_state(sys, {p.beta, rep.coherent_r, 0.0});

    rep.d_hot = distance(propagate(dec, hot0, rep.t_eval), rho_eq, m);
    rep.d_cold = distance(propagate(dec, cold0, rep.t_eval), rho_eq, m);
    rep.d_coherent = distance(propagate(dec, coh0, rep.t_eval), rho_eq, m);

    const double d_min = std::min({rep.d_hot, rep.d_cold, rep.d_coherent});
    const double tie = kSymmetryTol * std::max(d_min, 1e-300);
    if (rep.d_hot <= d_min + tie)
        rep.observed_fastest.push_back(Candidate::HotThermal);
    if (rep.d_cold <= d_min + tie)
        rep.observed_fastest.push_back(Candidate::ColdThermal);
    if (rep.d_coherent <= d_min + tie)
        rep.observed_fastest.push_back(Candidate::Coherent);

    rep.verified = rep.observed_fastest == rep.predicted_fastest;
    return rep;
}

} // namespace eqq

// closed_form.cpp — exact two-level expressions.

#include "eqq/closed_form.hpp"

#include <cmath>
#include <sstream>

namespace eqq {

namespace {

void require_canonical(const TwoLevelParams& p, const char* op) {
    if (!(p.omega0 > 0.0)) {
        throw ValidationError(std::string(op) + ": omega0 must be > 0");
    }
    if (!(p.beta > 0.0) || !(p.gamma01 > 0.0) || p.delta < 0.0) {
        throw ValidationError(std::string(op) + ": invalid parameters");
    }
}

} // namespace

double population_rate(const TwoLevelParams& p) {
    return p.gamma01 * (1.0 + std::exp(-p.beta * p.omega0));
}

DensityMatrix closed_form_state(const TwoLevelParams& p, double t) {
    require_canonical(p, "closed_form_state");
    if (t < 0.0) {
        throw ValidationError("closed_form_state: NegativeTime");
    }

    const double p1_eq = thermal_population_excited(p.beta, p.omega0);
    const double p1_0 = thermal_population_excited(p.beta0, p.omega0);
    const double pop_rate = population_rate(p);

    const double p1 = p1_eq + (p1_0 - p1_eq) * std::exp(-pop_rate * t);
    // The off-diagonal exponential carries the factor t in both the decay
    // and the rotation.
    const std::complex<double> c10 =
        std::polar(p.r, p.phi) *
        std::exp(std::complex<double>(-(0.5 * pop_rate + p.delta) * t,
                                      -p.omega0 * t));

    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0 - p1;
    m(1, 1) = p1;
    m(1, 0) = c10;
    m(0, 1) = std::conj(c10);
    return DensityMatrix{std::move(m)};
}

double kl_asymptotic(const TwoLevelParams& p, double t) {
    require_canonical(p, "kl_asymptotic");
    const double eb = std::exp(p.beta * p.omega0);
    const double eb0 = std::exp(p.beta0 * p.omega0);
    const double pop_rate = population_rate(p);

    const double population_term = eb * (eb0 - eb) * (eb0 - eb) /
                                   (2.0 * (eb0 + 1.0) * (eb0 + 1.0)) *
                                   std::exp(-2.0 * t * pop_rate);
    const double coherence_term = p.beta * p.r * p.r * p.omega0 * (eb + 1.0) /
                                  (eb - 1.0) *
                                  std::exp(-t * (pop_rate + 2.0 * p.delta));
    return population_term + coherence_term;
}

double kl_initial_thermal(double beta0, double beta, double omega0) {
    const double eb = std::exp(beta * omega0);
    const double eb0 = std::exp(beta0 * omega0);
    const double num = -eb0 * std::log(eb / (eb + 1.0)) +
                       std::log((eb + 1.0) / (eb0 + 1.0)) +
                       eb0 * std::log(eb0 / (eb0 + 1.0));
    return num / (eb0 + 1.0);
}

double gamma_prefactor(double beta0, double beta, double omega0) {
    if (beta0 == beta) {
        throw ValidationError("gamma_prefactor: DegeneratePoint (beta0 == beta)");
    }
    const double eb = std::exp(beta * omega0);
    const double eb0 = std::exp(beta0 * omega0);
    const double denom = 2.0 * (eb0 + 1.0) *
                         (-eb0 * std::log(eb / (eb + 1.0)) +
                          std::log((eb + 1.0) / (eb0 + 1.0)) +
                          eb0 * std::log(eb0 / (eb0 + 1.0)));
    return eb * (eb - eb0) * (eb - eb0) / denom;
}

double delta_critical(const TwoLevelParams& p) {
    return 0.5 * population_rate(p);
}

double trace_closed_form(const TwoLevelParams& p, double t) {
    require_canonical(p, "trace_closed_form");
    if (t < 0.0) {
        throw ValidationError("trace_closed_form: NegativeTime");
    }
    const double eb = std::exp(p.beta * p.omega0);
    const double eb0 = std::exp(p.beta0 * p.omega0);
    const double pop_rate = population_rate(p);

    const double coh = p.r * p.r * std::exp(-t * (pop_rate + 2.0 * p.delta));
    const double d0 = (eb - eb0) / ((eb + 1.0) * (eb0 + 1.0));
    const double pop = d0 * d0 * std::exp(-2.0 * pop_rate * t);
    return std::sqrt(coh + pop);
}

EquidistantExistence equidistant_existence(double beta, double omega0) {
    if (!(beta > 0.0) || !(omega0 > 0.0)) {
        throw ValidationError("equidistant_existence: beta and omega0 must be > 0");
    }
    const double eb = std::exp(beta * omega0);
    EquidistantExistence out;
    out.limit_hot = 0.5 * (-std::log(1.0 / (eb + 1.0)) -
                           std::log(eb / (eb + 1.0)) - 2.0 * std::log(2.0));
    out.limit_cold = std::log1p(std::exp(-beta * omega0));
    out.pair_guaranteed_up_to = std::min(out.limit_hot, out.limit_cold);
    out.cold_leq_hot = 0.5 * beta * omega0 >= std::log(2.0);
    return out;
}

} // namespace eqq

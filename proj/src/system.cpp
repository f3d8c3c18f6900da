// system.cpp — level systems, thermal and coherent states, dipole rates.

#include "eqq/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eqq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_level_count(std::size_t n) {
    if (n < 2 || n > 9) {
        std::ostringstream msg;
        msg << "LevelSystem: level count " << n << " outside [2, 9]";
        throw ValidationError(msg.str());
    }
}

// Connectivity of the undirected graph with edges where Gamma_ij > 0.
bool rate_graph_connected(const Eigen::MatrixXd& down) {
    const Eigen::Index n = down.rows();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Eigen::Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const Eigen::Index v = stack.back();
        stack.pop_back();
        for (Eigen::Index w = 0; w < n; ++w) {
            const double g = v < w ? down(v, w) : down(w, v);
            if (g > 0.0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace

DensityMatrix make_density(ComplexMatrix m, double tol) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ValidationError("DensityMatrix: NonSquare");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: NotHermitian (defect " << defect << ")";
        throw ValidationError(msg.str());
    }
    const double trace_err = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
    if (trace_err > tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace deviates from 1 by " << trace_err;
        throw ValidationError(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        ComplexMatrix(0.5 * (m + m.adjoint())), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < -tol) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << solver.eigenvalues()(0);
        throw ValidationError(msg.str());
    }
    return DensityMatrix{std::move(m)};
}

LevelSystem::LevelSystem(std::vector<double> energies,
                         Eigen::MatrixXd downward_rates, double beta,
                         double dephasing)
    : energies_(std::move(energies)),
      down_(std::move(downward_rates)),
      beta_(beta),
      dephasing_(dephasing) {
    require_level_count(energies_.size());
    const auto n = static_cast<Eigen::Index>(energies_.size());
    if (down_.rows() != n || down_.cols() != n) {
        throw ValidationError("LevelSystem: rate matrix dimension mismatch");
    }
    // beta = 0 (infinite bath temperature) is legitimate: rates symmetrize
    // and the stationary state is maximally mixed.
    if (!(beta_ >= 0.0) || !std::isfinite(beta_)) {
        throw ValidationError("LevelSystem: beta must be >= 0 and finite");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i >= j && down_(i, j) != 0.0) {
                throw ValidationError(
                    "LevelSystem: rates must be given for i < j only");
            }
            if (down_(i, j) < 0.0 || !std::isfinite(down_(i, j))) {
                throw ValidationError("LevelSystem: rates must be >= 0 and finite");
            }
        }
    }
    if (!rate_graph_connected(down_)) {
        throw ValidationError(
            "LevelSystem: rate graph is disconnected (no unique stationary state)");
    }
    if (dephasing_ < 0.0 || !std::isfinite(dephasing_)) {
        throw ValidationError("LevelSystem: dephasing must be >= 0 and finite");
    }
    if (dephasing_ > 0.0 && n != 2) {
        throw ValidationError("LevelSystem: dephasing is defined for two-level systems only");
    }
}

LevelSystem LevelSystem::from_json(const nlohmann::json& j) {
    if (!j.contains("levels") || !j.contains("beta") || !j.contains("rates")) {
        throw ValidationError("system JSON: requires keys levels, beta, rates");
    }
    std::vector<double> energies = j.at("levels").get<std::vector<double>>();
    require_level_count(energies.size());
    const auto n = static_cast<Eigen::Index>(energies.size());

    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [key, value] : j.at("rates").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos) {
            throw ValidationError("system JSON: rate key must be \"i-j\": " + key);
        }
        long i = -1;
        long jj = -1;
        try {
            i = std::stol(key.substr(0, dash));
            jj = std::stol(key.substr(dash + 1));
        } catch (const std::exception&) {
            throw ValidationError("system JSON: malformed rate key " + key);
        }
        if (i < 0 || jj < 0 || i >= jj || jj >= n) {
            throw ValidationError("system JSON: rate key \"" + key +
                                  "\" must have 0 <= i < j < level count");
        }
        down(i, jj) = value.get<double>();
    }

    const double beta = j.at("beta").get<double>();
    const double dephasing = j.value("dephasing", 0.0);
    return LevelSystem(std::move(energies), std::move(down), beta, dephasing);
}

double LevelSystem::downward_rate(Eigen::Index i, Eigen::Index j) const {
    if (i < 0 || j >= size() || i >= j) {
        throw ValidationError("LevelSystem::downward_rate: requires 0 <= i < j < N");
    }
    return down_(i, j);
}

double LevelSystem::rate(Eigen::Index i, Eigen::Index j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size() || i == j) {
        throw ValidationError("LevelSystem::rate: index out of range");
    }
    if (i < j) return down_(i, j);
    // upward: detailed balance against the stored downward rate
    return down_(j, i) * std::exp(-beta_ * (energy(i) - energy(j)));
}

double LevelSystem::omega0() const { return energy(1) - energy(0); }

LevelSystem two_level(double omega0, double beta, double gamma01,
                      double dephasing) {
    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(2, 2);
    down(0, 1) = gamma01;
    return LevelSystem({-0.5 * omega0, 0.5 * omega0}, std::move(down), beta,
                       dephasing);
}

LevelSystem three_level(double omega1, double omega2, double beta,
                        double gamma01, double gamma02, double gamma12) {
    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(3, 3);
    down(0, 1) = gamma01;
    down(0, 2) = gamma02;
    down(1, 2) = gamma12;
    return LevelSystem({0.0, omega1, omega2}, std::move(down), beta);
}

double thermal_population_excited(double beta0, double omega0) {
    const double x = beta0 * omega0;
    if (x == kInf) return 0.0;
    if (x == -kInf) return 1.0;
    // 1 / (1 + e^x), evaluated stably on both sides
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double coherence_bound(double beta0, double omega0) {
    const double p1 = thermal_population_excited(beta0, omega0);
    return std::sqrt(p1 * (1.0 - p1));
}

DensityMatrix thermal_state(const LevelSystem& sys, double beta_any) {
    const Eigen::Index n = sys.size();
    Eigen::VectorXd pops(n);

    if (std::isnan(beta_any)) {
        throw ValidationError("thermal_state: beta is NaN");
    }

    if (std::isinf(beta_any)) {
        // beta -> +inf: uniform over the minimal-energy levels;
        // beta -> -inf: uniform over the maximal-energy levels.
        const auto& eps = sys.energies();
        const double target = beta_any > 0
                                  ? *std::min_element(eps.begin(), eps.end())
                                  : *std::max_element(eps.begin(), eps.end());
        pops.setZero();
        Eigen::Index count = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (sys.energy(i) == target) {
                pops(i) = 1.0;
                ++count;
            }
        }
        pops /= static_cast<double>(count);
    } else {
        // Log-domain evaluation: shift by the largest exponent so the
        // weights stay representable for |beta*eps| far beyond 700.
        Eigen::VectorXd exponent(n);
        for (Eigen::Index i = 0; i < n; ++i) exponent(i) = -beta_any * sys.energy(i);
        const double shift = exponent.maxCoeff();
        double z = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            pops(i) = std::exp(exponent(i) - shift);
            z += pops(i);
        }
        pops /= z;
    }

    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = pops(i);
    return DensityMatrix{std::move(m)};
}

DensityMatrix coherent_state(const LevelSystem& sys,
                             const CoherentInitialSpec& spec) {
    if (sys.size() != 2) {
        throw ValidationError("coherent_state: two-level systems only");
    }
    if (spec.r < 0.0) {
        throw ValidationError("coherent_state: r must be >= 0");
    }
    const double omega0 = sys.omega0();
    const double r_max = coherence_bound(spec.beta0, omega0);
    if (spec.r > r_max + 1e-15) {
        std::ostringstream msg;
        msg << "coherent_state: CoherenceBoundViolated (r=" << spec.r
            << ", r_max=" << r_max << ")";
        throw ValidationError(msg.str());
    }

    const double p1 = thermal_population_excited(spec.beta0, omega0);
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0 - p1;
    m(1, 1) = p1;
    m(1, 0) = std::polar(spec.r, spec.phi);
    m(0, 1) = std::conj(m(1, 0));
    return DensityMatrix{std::move(m)};
}

DipoleRates dipole_rates(double amplitude, double omega0, double beta) {
    if (omega0 == 0.0) {
        throw ValidationError("dipole_rates: ZeroFrequency");
    }
    if (!(amplitude > 0.0) || !(beta > 0.0)) {
        throw ValidationError("dipole_rates: amplitude and beta must be > 0");
    }
    const double w = std::abs(omega0);
    const double x = beta * w;
    // A w^3 e^x / (e^x - 1) = A w^3 / (1 - e^{-x}), stable for large x
    const double gamma01 = amplitude * w * w * w / (-std::expm1(-x));
    const double gamma10 = std::exp(-x) * gamma01;
    return {gamma01, gamma10};
}

} // namespace eqq

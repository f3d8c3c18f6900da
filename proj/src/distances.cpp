// distances.cpp — KL, trace, reversed-KL, symmetrized-KL measures.

#include "eqq/distances.hpp"

#include <cmath>
#include <limits>

#include "eqq/numkernel.hpp"

namespace eqq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("distance: DimensionMismatch");
    }
}

// Eigenvalues of a density matrix, with strongly negative values rejected.
// Values inside [-1e-8, kZeroClamp] are treated as exactly zero: spectral
// propagation can undershoot zero by round-off well above the clamp.
Eigen::VectorXd state_eigenvalues(const DensityMatrix& rho) {
    const HermitianEig eig = hermitian_eig(rho.mat, 1e-8);
    if (eig.eigenvalues(0) < -1e-8) {
        throw ValidationError("distance: state has a negative eigenvalue");
    }
    return eig.eigenvalues;
}

double entropy_from_eigenvalues(const Eigen::VectorXd& lambda) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) > kZeroClamp) s -= lambda(i) * std::log(lambda(i));
    }
    return s;
}

// Tr[rho log sigma] for full-rank sigma.
double cross_term(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const ComplexMatrix log_sigma = matrix_log_psd(sigma.mat);
    return (rho.mat * log_sigma).trace().real();
}

double kl_divergence(const DensityMatrix& rho, const DensityMatrix& rho_eq) {
    const Eigen::VectorXd lambda = state_eigenvalues(rho);
    return -entropy_from_eigenvalues(lambda) - cross_term(rho, rho_eq);
}

double reversed_kl(const DensityMatrix& rho, const DensityMatrix& rho_eq) {
    const HermitianEig eig = hermitian_eig(rho.mat, 1e-8);
    const Eigen::Index n = rho.dim();
    if (eig.eigenvalues(0) < -1e-8) {
        throw ValidationError("distance: state has a negative eigenvalue");
    }
    // Support mismatch: rho_eq is full rank, so a vanishing eigenvalue of
    // rho makes the divergence infinite.
    if (eig.eigenvalues(0) <= kZeroClamp) return kInf;

    ComplexMatrix log_rho = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        log_rho += std::log(eig.eigenvalues(k)) * eig.eigenvectors.col(k) *
                   eig.eigenvectors.col(k).adjoint();
    }
    const Eigen::VectorXd mu = state_eigenvalues(rho_eq);
    return -entropy_from_eigenvalues(mu) -
           (rho_eq.mat * log_rho).trace().real();
}

} // namespace

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::KL: return "kl";
        case Measure::Trace: return "trace";
        case Measure::ReversedKL: return "revkl";
        case Measure::SymmetrizedKL: return "symkl";
    }
    throw ValidationError("measure_name: unknown measure");
}

Measure parse_measure(const std::string& name) {
    if (name == "kl") return Measure::KL;
    if (name == "trace") return Measure::Trace;
    if (name == "revkl") return Measure::ReversedKL;
    if (name == "symkl") return Measure::SymmetrizedKL;
    throw ValidationError("parse_measure: unknown measure \"" + name +
                          "\" (expected kl, trace, revkl, symkl)");
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_eigenvalues(state_eigenvalues(rho));
}

double distance(const DensityMatrix& rho, const DensityMatrix& rho_eq,
                Measure m) {
    require_same_dim(rho, rho_eq);
    switch (m) {
        case Measure::KL:
            return std::max(0.0, kl_divergence(rho, rho_eq));
        case Measure::Trace:
            return 0.5 * trace_norm_hermitian(
                             ComplexMatrix(rho.mat - rho_eq.mat), 1e-8);
        case Measure::ReversedKL:
            return std::max(0.0, reversed_kl(rho, rho_eq));
        case Measure::SymmetrizedKL: {
            const double rev = reversed_kl(rho, rho_eq);
            if (rev == kInf) return kInf;
            return std::max(0.0, 0.5 * (kl_divergence(rho, rho_eq) + rev));
        }
    }
    throw ValidationError("distance: unknown measure");
}

KlSplit kl_coherence_split(const DensityMatrix& rho,
                           const DensityMatrix& rho_eq) {
    require_same_dim(rho, rho_eq);
    DensityMatrix diag{ComplexMatrix(rho.mat.diagonal().asDiagonal())};
    KlSplit split;
    split.coherence_part = von_neumann_entropy(diag) - von_neumann_entropy(rho);
    split.diagonal_part = distance(diag, rho_eq, Measure::KL);
    return split;
}

std::vector<std::pair<double, double>> initial_distance_curve(
    const LevelSystem& sys, Measure m, const std::vector<double>& beta0_grid) {
    const DensityMatrix rho_eq = thermal_state(sys, sys.beta());
    std::vector<std::pair<double, double>> curve;
    curve.reserve(beta0_grid.size());
    for (double beta0 : beta0_grid) {
        curve.emplace_back(beta0,
                           distance(thermal_state(sys, beta0), rho_eq, m));
    }
    return curve;
}

} // namespace eqq

// lindblad.hpp — Builds the generator of the dissipative dynamics as an
// N^2 x N^2 superoperator, diagonalizes it, and propagates states exactly
// through the spectral expansion
//   e^{Lt}[rho0] = V1_R + sum_n Tr(rho0 Vn_L) Vn_R e^{lambda_n t}.
//
// Vectorization convention: row-major stacking of rho entries, so the
// matrix element rho_ij lives at vector index i*N + j.

#pragma once

#include <complex>
#include <vector>

#include "eqq/numkernel.hpp"
#include "eqq/system.hpp"

namespace eqq {

struct Superoperator {
    Eigen::Index hilbert_dim; // N
    ComplexMatrix mat;        // N^2 x N^2
};

struct SpectralDecomposition {
    Eigen::Index hilbert_dim;
    Eigen::VectorXcd eigenvalues;         // descending real part
    std::vector<ComplexMatrix> right_mats; // Vn_R, N x N
    std::vector<ComplexMatrix> left_mats;  // Vn_L, N x N, Tr(Vn_L Vm_R) = delta_nm
    Eigen::Index stationary_index;         // the lambda = 0 mode
};

// Row-major vectorization helpers.
Eigen::VectorXcd vectorize(const ComplexMatrix& m);
ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index n);

// Assembles -i[H, .] + sum_{i!=j} Gamma_ij (L_ij . L_ij^dag - {L_ij^dag L_ij, .}/2)
// with jump operators L_ij = |i><j|, H = diag(eps), plus the two-level
// dephasing channel -(Delta/4)[sigma_z, [sigma_z, .]].
Superoperator build_superoperator(const LevelSystem& sys);

// Diagonalizes the generator. The stationary right eigenmatrix is rescaled
// to unit trace (its left partner rescaled inversely, making it the
// identity-trace functional). Throws NumericalError (NonDiagonalizable /
// MultipleStationaryStates) on defective or degenerate-stationary input.
SpectralDecomposition decompose(const Superoperator& sop);

// Exact state at time t >= 0 via the spectral expansion; the result is
// re-hermitized as (rho + rho^dag)/2 before return.
DensityMatrix propagate(const SpectralDecomposition& dec,
                        const DensityMatrix& rho0, double t);

struct SlowestMode {
    std::complex<double> eigenvalue;
    ComplexMatrix prefactor; // Tr(rho0 V_L) V_R, pair-summed when complex
    bool conjugate_pair;
};

// Among the decaying modes in order of descending Re(lambda), returns the
// first whose overlap Tr(rho0 Vn_L) is resolvable; a complex mode is
// returned jointly with its conjugate partner so the prefactor is Hermitian.
// Throws ValidationError (NoOverlap) when every overlap vanishes
// (rho0 = stationary state).
SlowestMode slowest_relevant_mode(const SpectralDecomposition& dec,
                                  const DensityMatrix& rho0,
                                  double overlap_tol = 1e-12);

} // namespace eqq

// numkernel.hpp — Dense complex linear-algebra kernels the rest of the
// library builds on: Hermitian and general eigendecompositions, matrix
// logarithm of PSD matrices, trace norm of Hermitian matrices.
//
// Everything here is a pure function of its inputs and safe to call
// concurrently. Matrices are dense Eigen::MatrixXcd; intended sizes are
// small (Hilbert dimension <= 9, superoperator dimension <= 81).

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "eqq/errors.hpp"

namespace eqq {

using ComplexMatrix = Eigen::MatrixXcd;

// Default tolerances used across the library.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kZeroClamp = 1e-14;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kConditionLimit = 1e12;

// Largest absolute entry; zero for empty matrices.
double max_abs(const ComplexMatrix& a);

// Hermiticity defect ||a - a^dagger||_max.
double hermiticity_defect(const ComplexMatrix& a);

struct HermitianEig {
    Eigen::VectorXd eigenvalues; // ascending
    ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

// Eigendecomposition of a Hermitian matrix. Throws ValidationError
// (NonSquare / NotHermitian) if `a` is not square or its Hermiticity
// defect exceeds `hermiticity_tol`.
HermitianEig hermitian_eig(const ComplexMatrix& a,
                           double hermiticity_tol = kHermitianTol);

struct GeneralEig {
    Eigen::VectorXcd eigenvalues; // descending real part, ties by ascending imag
    ComplexMatrix right;          // right eigenvectors as columns
    ComplexMatrix left;           // left eigenvectors as rows, left*right = I
};

// Eigendecomposition of a general (non-Hermitian) matrix. Left eigenvectors
// are the inverse of the right-eigenvector matrix, so biorthonormality holds
// by construction. Eigenvalues within `degeneracy_tol` of each other in real
// part are ordered by imaginary part. Throws NumericalError
// (NonDiagonalizable) when the right-eigenvector matrix condition number
// exceeds kConditionLimit.
GeneralEig general_eig(const ComplexMatrix& a,
                       double degeneracy_tol = kDegeneracyTol);

// Matrix logarithm of a Hermitian PSD matrix: U log(Lambda) U^dagger with
// eigenvalues at or below `zero_clamp` dropped from the reconstruction
// (the 0*log 0 = 0 convention is applied by callers at the trace level).
// Throws ValidationError (NegativeEigenvalue) if any eigenvalue < -zero_clamp.
ComplexMatrix matrix_log_psd(const ComplexMatrix& a,
                             double zero_clamp = kZeroClamp,
                             double hermiticity_tol = kHermitianTol);

// Trace norm sum_i |lambda_i| of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a,
                            double hermiticity_tol = kHermitianTol);

} // namespace eqq

// numkernel.cpp — dense eigendecomposition, PSD log, trace norm.

#include "eqq/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace eqq {

double max_abs(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
    return max_abs(a - a.adjoint());
}

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        std::ostringstream msg;
        msg << op << ": NonSquare (" << a.rows() << "x" << a.cols() << ")";
        throw ValidationError(msg.str());
    }
}

void require_hermitian(const ComplexMatrix& a, double tol, const char* op) {
    const double defect = hermiticity_defect(a);
    if (defect > tol) {
        std::ostringstream msg;
        msg << op << ": NotHermitian (defect " << defect
            << " exceeds tolerance " << tol << ")";
        throw ValidationError(msg.str());
    }
}

} // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, double hermiticity_tol) {
    require_square(a, "hermitian_eig");
    require_hermitian(a, hermiticity_tol, "hermitian_eig");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eig: solver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

GeneralEig general_eig(const ComplexMatrix& a, double degeneracy_tol) {
    require_square(a, "general_eig");

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("general_eig: solver did not converge");
    }

    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const Eigen::VectorXcd& raw = solver.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index i, Eigen::Index j) {
                  const auto li = raw(i);
                  const auto lj = raw(j);
                  if (std::abs(li.real() - lj.real()) > degeneracy_tol) {
                      return li.real() > lj.real();
                  }
                  return li.imag() < lj.imag();
              });

    GeneralEig out;
    out.eigenvalues.resize(n);
    out.right.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = raw(order[static_cast<std::size_t>(k)]);
        out.right.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(out.right);
    const double smin = svd.singularValues()(n - 1);
    const double smax = svd.singularValues()(0);
    if (smin <= 0.0 || smax / smin > kConditionLimit) {
        std::ostringstream msg;
        msg << "general_eig: NonDiagonalizable (eigenvector condition number "
            << (smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity())
            << " exceeds " << kConditionLimit << ")";
        throw NumericalError(msg.str());
    }

    out.left = out.right.inverse();
    return out;
}

ComplexMatrix matrix_log_psd(const ComplexMatrix& a, double zero_clamp,
                             double hermiticity_tol) {
    const HermitianEig eig = hermitian_eig(a, hermiticity_tol);
    const Eigen::Index n = a.rows();

    ComplexMatrix log_a = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues(k);
        if (lambda < -zero_clamp) {
            std::ostringstream msg;
            msg << "matrix_log_psd: NegativeEigenvalue (" << lambda << ")";
            throw ValidationError(msg.str());
        }
        if (lambda <= zero_clamp) continue; // clamped to zero, excluded
        log_a += std::log(lambda) * eig.eigenvectors.col(k) *
                 eig.eigenvectors.col(k).adjoint();
    }
    return log_a;
}

double trace_norm_hermitian(const ComplexMatrix& a, double hermiticity_tol) {
    require_square(a, "trace_norm_hermitian");
    require_hermitian(a, hermiticity_tol, "trace_norm_hermitian");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a,
                                                        Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("trace_norm_hermitian: solver did not converge");
    }
    return solver.eigenvalues().cwiseAbs().sum();
}

} // namespace eqq

// lindblad.cpp — superoperator assembly and spectral propagation.

#include "eqq/lindblad.hpp"

#include <cmath>
#include <sstream>

namespace eqq {

namespace {

using Complex = std::complex<double>;

// Kronecker product, row-major vec convention: vec(A rho B) = (A (x) B^T) vec(rho).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols();
    const Eigen::Index br = b.rows(), bc = b.cols();
    ComplexMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i) {
        for (Eigen::Index j = 0; j < ac; ++j) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix left_mult(const ComplexMatrix& a) {
    return kron(a, ComplexMatrix::Identity(a.rows(), a.cols()));
}

ComplexMatrix right_mult(const ComplexMatrix& b) {
    return kron(ComplexMatrix::Identity(b.rows(), b.cols()), b.transpose());
}

} // namespace

Eigen::VectorXcd vectorize(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    Eigen::VectorXcd v(n * m.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    }
    return v;
}

ComplexMatrix unvectorize(const Eigen::VectorXcd& v, Eigen::Index n) {
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
    }
    return m;
}

Superoperator build_superoperator(const LevelSystem& sys) {
    const Eigen::Index n = sys.size();
    const Eigen::Index d = n * n;

    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) h(i, i) = sys.energy(i);

    ComplexMatrix gen = Complex(0.0, -1.0) * (left_mult(h) - right_mult(h));

    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double g = sys.rate(i, j);
            if (g == 0.0) continue;
            ComplexMatrix jump = ComplexMatrix::Zero(n, n); // |i><j|
            jump(i, j) = 1.0;
            const ComplexMatrix number = jump.adjoint() * jump; // |j><j|
            gen += g * (kron(jump, jump.conjugate()) -
                        0.5 * (left_mult(number) + right_mult(number)));
        }
    }

    if (sys.dephasing() > 0.0) {
        ComplexMatrix sz(2, 2);
        sz << 1.0, 0.0, 0.0, -1.0;
        const ComplexMatrix szsz = kron(sz, sz.transpose());
        gen += -(sys.dephasing() / 2.0) *
               (ComplexMatrix::Identity(d, d) - szsz);
    }

    return Superoperator{n, std::move(gen)};
}

SpectralDecomposition decompose(const Superoperator& sop) {
    const Eigen::Index n = sop.hilbert_dim;
    const Eigen::Index d = n * n;

    GeneralEig eig = general_eig(sop.mat);

    SpectralDecomposition dec;
    dec.hilbert_dim = n;
    dec.eigenvalues = eig.eigenvalues;
    dec.right_mats.reserve(static_cast<std::size_t>(d));
    dec.left_mats.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) {
        dec.right_mats.push_back(unvectorize(eig.right.col(k), n));
        // The matrix form of the left row vector pairs with the right
        // eigenmatrix through Tr(V_L V_R) = l . r.
        dec.left_mats.push_back(
            unvectorize(eig.left.row(k).transpose(), n).transpose());
    }

    Eigen::Index stationary = -1;
    for (Eigen::Index k = 0; k < d; ++k) {
        if (std::abs(dec.eigenvalues(k)) <= 1e-10) {
            if (stationary >= 0) {
                throw NumericalError(
                    "decompose: MultipleStationaryStates (rate graph "
                    "effectively disconnected)");
            }
            stationary = k;
        }
    }
    if (stationary < 0) {
        throw NumericalError("decompose: no stationary mode found");
    }
    dec.stationary_index = stationary;

    // Normalize the stationary pair so the right eigenmatrix has unit trace
    // and the left partner is the identity-trace functional.
    const Complex tr = dec.right_mats[static_cast<std::size_t>(stationary)].trace();
    if (std::abs(tr) < 1e-14) {
        throw NumericalError("decompose: stationary mode has zero trace");
    }
    dec.right_mats[static_cast<std::size_t>(stationary)] /= tr;
    dec.left_mats[static_cast<std::size_t>(stationary)] *= tr;

    return dec;
}

namespace {

Complex overlap(const ComplexMatrix& rho0, const ComplexMatrix& v_left) {
    return (rho0 * v_left).trace();
}

} // namespace

DensityMatrix propagate(const SpectralDecomposition& dec,
                        const DensityMatrix& rho0, double t) {
    if (t < 0.0) {
        throw ValidationError("propagate: NegativeTime");
    }
    const Eigen::Index n = dec.hilbert_dim;
    if (rho0.dim() != n) {
        throw ValidationError("propagate: DimensionMismatch");
    }

    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    const Eigen::Index d = n * n;
    for (Eigen::Index k = 0; k < d; ++k) {
        const Complex c = overlap(rho0.mat, dec.left_mats[static_cast<std::size_t>(k)]);
        acc += c * std::exp(dec.eigenvalues(k) * t) *
               dec.right_mats[static_cast<std::size_t>(k)];
    }

    ComplexMatrix sym = 0.5 * (acc + acc.adjoint());
    return DensityMatrix{std::move(sym)};
}

SlowestMode slowest_relevant_mode(const SpectralDecomposition& dec,
                                  const DensityMatrix& rho0,
                                  double overlap_tol) {
    const Eigen::Index d = dec.hilbert_dim * dec.hilbert_dim;
    const double scale = std::max(max_abs(rho0.mat), 1e-300);

    for (Eigen::Index k = 0; k < d; ++k) {
        if (k == dec.stationary_index) continue;
        const Complex c = overlap(rho0.mat, dec.left_mats[static_cast<std::size_t>(k)]);
        if (std::abs(c) <= overlap_tol * scale) continue;

        SlowestMode mode;
        mode.eigenvalue = dec.eigenvalues(k);
        mode.prefactor = c * dec.right_mats[static_cast<std::size_t>(k)];
        mode.conjugate_pair = false;

        if (std::abs(mode.eigenvalue.imag()) > 1e-12) {
            // Find the conjugate partner and fold it in so the asymptotic
            // prediction is Hermitian.
            for (Eigen::Index m = 0; m < d; ++m) {
                if (m == k || m == dec.stationary_index) continue;
                const Complex lm = dec.eigenvalues(m);
                if (std::abs(lm - std::conj(mode.eigenvalue)) < 1e-9) {
                    const Complex cm =
                        overlap(rho0.mat, dec.left_mats[static_cast<std::size_t>(m)]);
                    mode.prefactor += cm * dec.right_mats[static_cast<std::size_t>(m)];
                    mode.conjugate_pair = true;
                    break;
                }
            }
        }
        return mode;
    }
    throw ValidationError("slowest_relevant_mode: NoOverlap (state is stationary)");
}

} // namespace eqq

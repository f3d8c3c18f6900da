// test_numkernel.cpp — eigendecomposition, PSD log, trace norm.

#include "doctest.h"

#include <cmath>
#include <random>

#include "eqq/numkernel.hpp"
#include "test_helpers.hpp"

using namespace eqq;
using eqq::testing::random_hermitian;
using eqq::testing::random_unitary;

TEST_CASE("hermitian_eig: identity") {
    const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
    const HermitianEig eig = hermitian_eig(eye);
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
    CHECK(max_abs(eig.eigenvectors * eig.eigenvectors.adjoint() - eye) < 1e-12);
}

TEST_CASE("hermitian_eig: thermal populations at beta = 1") {
    // Direct evaluation of exp(-beta H)/Z for beta = 1, omega0 = 1.
    const double p_hot = 1.0 / (1.0 + std::exp(1.0));
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = p_hot;
    rho(1, 1) = 1.0 - p_hot;
    const HermitianEig eig = hermitian_eig(rho);
    CHECK(eig.eigenvalues(0) == doctest::Approx(0.26894142136999512).epsilon(1e-12));
    CHECK(eig.eigenvalues(1) == doctest::Approx(0.73105857863000487).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: sigma_z / 2 spectrum") {
    ComplexMatrix h(2, 2);
    h << 0.5, 0.0, 0.0, -0.5;
    const HermitianEig eig = hermitian_eig(h);
    CHECK(eig.eigenvalues(0) == doctest::Approx(-0.5));
    CHECK(eig.eigenvalues(1) == doctest::Approx(0.5));
}

TEST_CASE("hermitian_eig: rejects non-square and non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), ValidationError);
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(hermitian_eig(m), ValidationError);
}

TEST_CASE("hermitian_eig: reconstruction over random sizes 2..9") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 9; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = random_hermitian(n, rng);
            const HermitianEig eig = hermitian_eig(a, 1e-9);
            ComplexMatrix rebuilt =
                eig.eigenvectors *
                eig.eigenvalues.cast<std::complex<double>>().asDiagonal() *
                eig.eigenvectors.adjoint();
            const double scale = std::max(1.0, max_abs(a));
            CHECK(max_abs(a - rebuilt) <= 1e-10 * scale);
            CHECK(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                          ComplexMatrix::Identity(n, n)) <= 1e-10);
            for (int k = 1; k < n; ++k) {
                CHECK(eig.eigenvalues(k) >= eig.eigenvalues(k - 1));
            }
        }
    }
}

TEST_CASE("general_eig: diagonal matrix") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(1, 1) = -2.0;
    const GeneralEig eig = general_eig(a);
    CHECK(eig.eigenvalues(0) == std::complex<double>(0.0, 0.0));
    CHECK(eig.eigenvalues(1) == std::complex<double>(-2.0, 0.0));
    CHECK(max_abs(eig.left * eig.right - ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("general_eig: shift by c*I preserves eigenvectors") {
    std::mt19937_64 rng(12);
    const ComplexMatrix a = eqq::testing::random_complex(4, 4, rng);
    const std::complex<double> c(0.7, -0.3);
    const GeneralEig base = general_eig(a);
    const GeneralEig shifted =
        general_eig(ComplexMatrix(a + c * ComplexMatrix::Identity(4, 4)));
    // Same sort order is not guaranteed after the shift; match eigenvalues.
    for (int k = 0; k < 4; ++k) {
        double best = 1e300;
        int match = -1;
        for (int m = 0; m < 4; ++m) {
            const double d = std::abs(shifted.eigenvalues(m) -
                                      (base.eigenvalues(k) + c));
            if (d < best) {
                best = d;
                match = m;
            }
        }
        REQUIRE(match >= 0);
        CHECK(best < 1e-9);
        // Columns may differ by a phase; compare projectors.
        const auto vb = base.right.col(k);
        const auto vs = shifted.right.col(match);
        CHECK(max_abs(vb * vb.adjoint() - vs * vs.adjoint()) < 1e-8);
    }
}

TEST_CASE("general_eig: biorthonormality on random matrices") {
    std::mt19937_64 rng(13);
    for (int n : {2, 4, 9}) {
        const ComplexMatrix a = eqq::testing::random_complex(n, n, rng);
        const GeneralEig eig = general_eig(a);
        CHECK(max_abs(eig.left * eig.right - ComplexMatrix::Identity(n, n)) <=
              1e-8);
    }
}

TEST_CASE("general_eig: defective matrix raises NonDiagonalizable") {
    ComplexMatrix jordan(2, 2);
    jordan << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(general_eig(jordan), NumericalError);
}

TEST_CASE("matrix_log_psd: identity and diagonal cases") {
    CHECK(max_abs(matrix_log_psd(ComplexMatrix::Identity(3, 3))) < 1e-14);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = std::exp(1.0);
    d(1, 1) = std::exp(2.0);
    const ComplexMatrix log_d = matrix_log_psd(d);
    CHECK(log_d(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(log_d(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(log_d(0, 1)) < 1e-14);
}

TEST_CASE("matrix_log_psd: thermal state logs") {
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 0.26894142136999512;
    rho(1, 1) = 0.73105857863000487;
    const ComplexMatrix log_rho = matrix_log_psd(rho);
    CHECK(log_rho(0, 0).real() ==
          doctest::Approx(std::log(0.26894142136999512)).epsilon(1e-12));
    CHECK(log_rho(1, 1).real() ==
          doctest::Approx(std::log(0.73105857863000487)).epsilon(1e-12));
}

TEST_CASE("matrix_log_psd: rejects negative eigenvalues, clamps zeros") {
    ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
    neg(0, 0) = -0.25;
    CHECK_THROWS_AS(matrix_log_psd(neg), ValidationError);

    ComplexMatrix rank1 = ComplexMatrix::Zero(2, 2);
    rank1(0, 0) = 1.0;
    const ComplexMatrix log_r = matrix_log_psd(rank1); // zero mode excluded
    CHECK(std::abs(log_r(1, 1)) < 1e-14);
    CHECK(std::abs(log_r(0, 0)) < 1e-14);
}

TEST_CASE("matrix_log_psd: commutes with unitary conjugation") {
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 5; ++rep) {
        const int n = 3;
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        std::uniform_real_distribution<double> u(0.1, 2.0);
        for (int i = 0; i < n; ++i) d(i, i) = u(rng);
        const ComplexMatrix q = random_unitary(n, rng);
        const ComplexMatrix lhs = matrix_log_psd(ComplexMatrix(q * d * q.adjoint()));
        const ComplexMatrix rhs = q * matrix_log_psd(d) * q.adjoint();
        CHECK(max_abs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("trace_norm_hermitian: basic values") {
    CHECK(trace_norm_hermitian(ComplexMatrix::Zero(3, 3)) == 0.0);
    ComplexMatrix d(2, 2);
    d << 0.5, 0.0, 0.0, -0.5;
    CHECK(trace_norm_hermitian(d) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace_norm_hermitian: symmetry and triangle inequality") {
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = random_hermitian(4, rng);
        const ComplexMatrix b = random_hermitian(4, rng);
        const double na = trace_norm_hermitian(a);
        CHECK(trace_norm_hermitian(ComplexMatrix(-a)) ==
              doctest::Approx(na).epsilon(1e-12));
        CHECK(trace_norm_hermitian(ComplexMatrix(a + b)) <=
              na + trace_norm_hermitian(b) + 1e-10);
    }
}

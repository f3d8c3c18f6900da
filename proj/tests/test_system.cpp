// test_system.cpp — level systems, thermal/coherent states, dipole rates.

#include "doctest.h"

#include <cmath>
#include <limits>

#include "json.hpp"

#include "eqq/system.hpp"

using namespace eqq;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("thermal_state: beta = 0 is maximally mixed") {
    const LevelSystem sys = three_level(1.0, 2.0, 1.0, 1.0, 1.0, 1.0);
    const DensityMatrix rho = thermal_state(sys, 0.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(rho.mat(i, i).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("thermal_state: two-level populations at beta = 1") {
    const LevelSystem sys = two_level(1.0, 1.0);
    const DensityMatrix rho = thermal_state(sys, 1.0);
    // exp(-beta eps)/Z: ground (index 0) carries e/(1+e).
    CHECK(rho.mat(0, 0).real() ==
          doctest::Approx(0.73105857863000487).epsilon(1e-13));
    CHECK(rho.mat(1, 1).real() ==
          doctest::Approx(0.26894142136999512).epsilon(1e-13));
    CHECK(std::abs(rho.mat(0, 1)) == 0.0);
}

TEST_CASE("thermal_state: three-level Boltzmann weights") {
    const LevelSystem sys = three_level(1.0, 2.0, 1.0, 1.0, 1.0, 1.0);
    const DensityMatrix rho = thermal_state(sys, 1.0);
    const double z = 1.0 + std::exp(-1.0) + std::exp(-2.0);
    CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0 / z).epsilon(1e-13));
    CHECK(rho.mat(1, 1).real() == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-13));
    CHECK(rho.mat(2, 2).real() == doctest::Approx(std::exp(-2.0) / z).epsilon(1e-13));
}

TEST_CASE("thermal_state: populations strictly decreasing in energy") {
    const LevelSystem sys = three_level(0.7, 1.9, 2.3, 1.0, 0.5, 0.25);
    const DensityMatrix rho = thermal_state(sys, 2.3);
    CHECK(rho.mat(0, 0).real() > rho.mat(1, 1).real());
    CHECK(rho.mat(1, 1).real() > rho.mat(2, 2).real());
}

TEST_CASE("thermal_state: extreme beta stays finite (log-domain evaluation)") {
    const LevelSystem sys = two_level(1.0, 1.0);
    const DensityMatrix cold = thermal_state(sys, 5000.0); // beta*eps far past exp range
    CHECK(cold.mat(0, 0).real() == doctest::Approx(1.0));
    CHECK(cold.mat(1, 1).real() == doctest::Approx(0.0));

    const DensityMatrix ground = thermal_state(sys, kInf);
    CHECK(ground.mat(0, 0).real() == 1.0);
    const DensityMatrix top = thermal_state(sys, -kInf);
    CHECK(top.mat(1, 1).real() == 1.0);
}

TEST_CASE("detailed balance holds exactly for derived rates") {
    const LevelSystem sys = three_level(0.9, 2.1, 1.7, 1.0, 0.8, 0.6);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (i == j) continue;
            const double lhs = sys.rate(i, j) * std::exp(-sys.beta() * sys.energy(j));
            const double rhs = sys.rate(j, i) * std::exp(-sys.beta() * sys.energy(i));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
        }
    }
}

TEST_CASE("LevelSystem: disconnected rate graph rejected at construction") {
    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(3, 3);
    down(0, 1) = 1.0; // level 2 has no transitions
    CHECK_THROWS_AS(LevelSystem({0.0, 1.0, 2.0}, down, 1.0), ValidationError);

    // Cascade (no 0-2 rate) and V (no 1-2 rate) stay connected.
    CHECK_NOTHROW(three_level(1.0, 2.0, 1.0, 1.0, 0.0, 1.0));
    CHECK_NOTHROW(three_level(1.0, 2.0, 1.0, 1.0, 2.0, 0.0));
}

TEST_CASE("LevelSystem: dephasing restricted to two levels") {
    CHECK_NOTHROW(two_level(1.0, 1.0, 1.0, 0.5));
    Eigen::MatrixXd down = Eigen::MatrixXd::Zero(3, 3);
    down(0, 1) = 1.0;
    down(1, 2) = 1.0;
    CHECK_THROWS_AS(LevelSystem({0.0, 1.0, 2.0}, down, 1.0, 0.5),
                    ValidationError);
}

TEST_CASE("coherent_state: r = 0 reproduces the thermal state") {
    const LevelSystem sys = two_level(1.0, 1.0);
    const DensityMatrix a = coherent_state(sys, {1.7, 0.0, 0.0});
    const DensityMatrix b = thermal_state(sys, 1.7);
    CHECK(max_abs(a.mat - b.mat) < 1e-15);
}

TEST_CASE("coherent_state: populations and off-diagonals match the spec form") {
    const LevelSystem sys = two_level(1.0, 1.0);
    const double beta0 = 0.9;
    const double r = 0.2;
    const double phi = 0.6;
    const DensityMatrix rho = coherent_state(sys, {beta0, r, phi});
    const double p1 = 1.0 / (1.0 + std::exp(beta0));
    CHECK(rho.mat(1, 1).real() == doctest::Approx(p1).epsilon(1e-14));
    CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0 - p1).epsilon(1e-14));
    CHECK(std::abs(rho.mat(1, 0) - std::polar(r, phi)) < 1e-15);
    CHECK(std::abs(rho.mat(0, 1) - std::conj(std::polar(r, phi))) < 1e-15);
}

TEST_CASE("coherent_state: pure at the Bloch bound, rejected beyond it") {
    const LevelSystem sys = two_level(1.0, 1.0);
    const double beta0 = 0.8;
    const double r_max = coherence_bound(beta0, 1.0);

    const DensityMatrix pure = coherent_state(sys, {beta0, r_max, 0.0});
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pure.mat);
    CHECK(std::abs(es.eigenvalues()(0)) < 1e-12); // rank one
    CHECK(es.eigenvalues()(1) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(coherent_state(sys, {beta0, r_max + 1e-6, 0.0}),
                    ValidationError);
}

TEST_CASE("coherent_state: eigenvalues within [0, 1] across the allowed range") {
    const LevelSystem sys = two_level(1.0, 1.0);
    for (double beta0 : {-1.0, 0.0, 0.5, 1.0, 2.5}) {
        const double r_max = coherence_bound(beta0, 1.0);
        for (double f : {0.0, 0.5, 0.99, 1.0}) {
            const DensityMatrix rho =
                coherent_state(sys, {beta0, f * r_max, 1.1});
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.mat);
            CHECK(es.eigenvalues()(0) >= -1e-12);
            CHECK(es.eigenvalues()(1) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("dipole_rates: detailed balance ratio and limits") {
    for (double beta : {0.4, 1.0, 3.0}) {
        for (double w : {0.5, 1.0, 2.0}) {
            const DipoleRates rates = dipole_rates(1.3, w, beta);
            CHECK(rates.gamma10 / rates.gamma01 ==
                  doctest::Approx(std::exp(-beta * w)).epsilon(1e-14));
        }
    }
    // A = 1, omega0 = 1, beta = 1: e / (e - 1).
    const DipoleRates unit = dipole_rates(1.0, 1.0, 1.0);
    CHECK(unit.gamma01 == doctest::Approx(1.5819767068693265).epsilon(1e-14));

    // Zero-temperature limit: Gamma01 -> A |w|^3, Gamma10 -> 0.
    const DipoleRates frozen = dipole_rates(2.0, 1.5, 400.0);
    CHECK(frozen.gamma01 == doctest::Approx(2.0 * 1.5 * 1.5 * 1.5).epsilon(1e-12));
    CHECK(frozen.gamma10 == doctest::Approx(0.0));

    CHECK_THROWS_AS(dipole_rates(1.0, 0.0, 1.0), ValidationError);
}

TEST_CASE("system JSON: round trip and validation") {
    const nlohmann::json j = {
        {"levels", {0.0, 1.0, 2.0}},
        {"beta", 1.0},
        {"rates", {{"0-1", 1.0}, {"1-2", 1.5}}},
    };
    const LevelSystem sys = LevelSystem::from_json(j);
    CHECK(sys.size() == 3);
    CHECK(sys.downward_rate(0, 1) == 1.0);
    CHECK(sys.downward_rate(1, 2) == 1.5);
    CHECK(sys.downward_rate(0, 2) == 0.0);
    CHECK(sys.dephasing() == 0.0);

    nlohmann::json bad = j;
    bad["rates"] = {{"1-0", 1.0}}; // keys must have i < j
    CHECK_THROWS_AS(LevelSystem::from_json(bad), ValidationError);

    nlohmann::json missing = j;
    missing.erase("beta");
    CHECK_THROWS_AS(LevelSystem::from_json(missing), ValidationError);

    nlohmann::json dephased = {
        {"levels", {-0.5, 0.5}},
        {"beta", 1.0},
        {"rates", {{"0-1", 1.0}}},
        {"dephasing", 1.4},
    };
    CHECK(LevelSystem::from_json(dephased).dephasing() == 1.4);
}

TEST_CASE("make_density validates the invariants") {
    ComplexMatrix good(2, 2);
    good << 0.5, 0.1, 0.1, 0.5;
    CHECK_NOTHROW(make_density(good));

    ComplexMatrix bad_trace(2, 2);
    bad_trace << 0.7, 0.0, 0.0, 0.5;
    CHECK_THROWS_AS(make_density(bad_trace), ValidationError);

    ComplexMatrix not_psd(2, 2);
    not_psd << 0.5, 0.6, 0.6, 0.5;
    CHECK_THROWS_AS(make_density(not_psd), ValidationError);
}

#include <doctest.h>

#include <Eigen/Dense>

#include "cavgrover/errors.hpp"
#include "cavgrover/statespace.hpp"

using namespace cavgrover;

TEST_CASE("register basis dimension and index convention") {
    const RegisterBasis one = build_register_basis(1);
    CHECK(one.dimension() == 2);
    CHECK(one.labels == std::vector<std::string>{"psi_1;0", "psi_0;1"});

    const RegisterBasis eight = build_register_basis(8);
    CHECK(eight.dimension() == 9);

    const RegisterBasis four = build_register_basis(4);
    CHECK(four.photon_index() == 4);
    CHECK(four.labels[4] == "psi_0;1");
    CHECK(four.labels[2] == "psi_3;0");

    CHECK_THROWS_AS(build_register_basis(0), InvalidSizeError);
}

TEST_CASE("register basis labels are unique") {
    const RegisterBasis basis = build_register_basis(12);
    auto labels = basis.labels;
    std::sort(labels.begin(), labels.end());
    CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
}

TEST_CASE("full basis has 3N labels with one excitation each") {
    CHECK(build_full_basis(1).dimension() == 3);
    CHECK(build_full_basis(3).dimension() == 9);
    CHECK_THROWS_AS(build_full_basis(0), InvalidSizeError);

    // Each site contributes exactly one photon label, one |e> label and one
    // |1> label; each carries excitation number 1 by construction.
    const FullBasis basis = build_full_basis(3);
    REQUIRE(basis.labels.size() == 9);
    for (int k = 1; k <= 3; ++k) {
        const std::string site = "site" + std::to_string(k);
        CHECK(basis.labels[basis.photon_index(k)] == site + ":photon");
        CHECK(basis.labels[basis.excited_index(k)] == site + ":e");
        CHECK(basis.labels[basis.qubit_index(k)] == site + ":1");
    }
}

TEST_CASE("w state amplitudes") {
    const RegisterState w4 = w_state(4);
    REQUIRE(w4.amplitudes.size() == 5);
    for (int i = 0; i < 4; ++i) {
        CHECK(w4.amplitudes(i).real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(w4.amplitudes(i).imag() == 0.0);
    }
    CHECK(w4.amplitudes(4) == std::complex<double>(0.0, 0.0));

    const RegisterState w1 = w_state(1);
    CHECK(w1.amplitudes(0).real() == doctest::Approx(1.0));
    CHECK(w1.amplitudes(1) == std::complex<double>(0.0, 0.0));

    CHECK(w_state(8).norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("bloch modes on the ring") {
    const BlochModes m = bloch_modes(4, 1.0, Boundary::Periodic);
    // j-ordered energies 2J cos(2 pi j / N)
    CHECK(m.energies(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m.energies(1) == doctest::Approx(0.0).scale(1.0));
    CHECK(m.energies(2) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(m.energies(3) == doctest::Approx(0.0).scale(1.0));

    REQUIRE(m.uniform_mode_index.has_value());
    const int u = *m.uniform_mode_index;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(m.profiles(k, u) - 0.5) < 1e-14);
    }
}

TEST_CASE("bloch modes diagonalize the hopping matrix") {
    for (Boundary b : {Boundary::Periodic, Boundary::Open}) {
        for (int n : {1, 2, 3, 5, 8}) {
            const double j = 0.37;
            const BlochModes m = bloch_modes(n, j, b);
            const Eigen::MatrixXd h = hopping_matrix(n, j, b);

            const Eigen::MatrixXcd gram = m.profiles.adjoint() * m.profiles;
            CHECK((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);

            for (int mode = 0; mode < n; ++mode) {
                const Eigen::VectorXcd residual =
                    h * m.profiles.col(mode) - m.energies(mode) * m.profiles.col(mode);
                CHECK(residual.cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("two-site open chain modes") {
    const BlochModes m = bloch_modes(2, 1.0, Boundary::Open);
    CHECK(m.energies(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.energies(1) == doctest::Approx(-1.0).epsilon(1e-14));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(m.profiles(0, 0) - inv_sqrt2) < 1e-14);
    CHECK(std::abs(m.profiles(1, 0) - inv_sqrt2) < 1e-14);
    CHECK(std::abs(m.profiles(0, 1) - inv_sqrt2) < 1e-14);
    CHECK(std::abs(m.profiles(1, 1) + inv_sqrt2) < 1e-14);
    CHECK(!m.uniform_mode_index.has_value());
}

TEST_CASE("single cavity has zero hopping energy") {
    const BlochModes m = bloch_modes(1, 3.5, Boundary::Periodic);
    REQUIRE(m.n_modes() == 1);
    CHECK(m.energies(0) == 0.0);
    CHECK(std::abs(m.profiles(0, 0) - 1.0) < 1e-14);
}

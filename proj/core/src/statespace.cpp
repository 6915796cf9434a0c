#include "cavgrover/statespace.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "cavgrover/errors.hpp"

namespace cavgrover {

namespace {

void require_positive_n(int n_qubits) {
    if (n_qubits < 1) {
        throw InvalidSizeError("n_qubits must be >= 1 (got " + std::to_string(n_qubits) + ")");
    }
}

} // namespace

RegisterBasis build_register_basis(int n_qubits) {
    require_positive_n(n_qubits);
    RegisterBasis basis;
    basis.n_qubits = n_qubits;
    basis.labels.reserve(static_cast<size_t>(n_qubits) + 1);
    for (int n = 1; n <= n_qubits; ++n) {
        basis.labels.push_back("psi_" + std::to_string(n) + ";0");
    }
    basis.labels.push_back("psi_0;1");
    return basis;
}

FullBasis build_full_basis(int n_qubits) {
    require_positive_n(n_qubits);
    FullBasis basis;
    basis.n_qubits = n_qubits;
    basis.labels.reserve(static_cast<size_t>(3 * n_qubits));
    for (int k = 1; k <= n_qubits; ++k) {
        const std::string site = "site" + std::to_string(k);
        basis.labels.push_back(site + ":photon");
        basis.labels.push_back(site + ":e");
        basis.labels.push_back(site + ":1");
    }
    return basis;
}

RegisterState w_state(int n_qubits) {
    require_positive_n(n_qubits);
    RegisterState state;
    state.basis = BasisKind::Register;
    state.n_qubits = n_qubits;
    state.amplitudes = Eigen::VectorXcd::Zero(n_qubits + 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    state.amplitudes.head(n_qubits).setConstant(amp);
    return state;
}

RegisterState photon_state(int n_qubits) {
    require_positive_n(n_qubits);
    RegisterState state;
    state.basis = BasisKind::Register;
    state.n_qubits = n_qubits;
    state.amplitudes = Eigen::VectorXcd::Zero(n_qubits + 1);
    state.amplitudes(n_qubits) = 1.0;
    return state;
}

Eigen::MatrixXd hopping_matrix(int n_sites, double hopping, Boundary boundary) {
    require_positive_n(n_sites);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_sites, n_sites);
    if (n_sites == 1) {
        return h; // no neighbours
    }
    const int last = (boundary == Boundary::Periodic) ? n_sites : n_sites - 1;
    for (int k = 0; k < last; ++k) {
        const int next = (k + 1) % n_sites;
        h(k, next) += hopping;
        h(next, k) += hopping;
    }
    return h;
}

BlochModes bloch_modes(int n_sites, double hopping, Boundary boundary) {
    require_positive_n(n_sites);
    BlochModes modes;
    modes.energies.resize(n_sites);
    modes.profiles.resize(n_sites, n_sites);

    using std::numbers::pi;
    if (boundary == Boundary::Periodic) {
        // Fourier modes of the ring; exact for the circulant hopping matrix.
        // The N = 2 "ring" counts the single pair twice, so its mode energies
        // are +-2J, consistent with 2J cos(2 pi j / N).
        const double norm = 1.0 / std::sqrt(static_cast<double>(n_sites));
        for (int j = 0; j < n_sites; ++j) {
            modes.energies(j) =
                (n_sites == 1) ? 0.0 : 2.0 * hopping * std::cos(2.0 * pi * j / n_sites);
            for (int k = 0; k < n_sites; ++k) {
                const double phase = 2.0 * pi * j * k / n_sites;
                modes.profiles(k, j) = std::polar(norm, phase);
            }
        }
        modes.uniform_mode_index = 0;
    } else {
        // Sine modes of the open chain.
        const double norm = std::sqrt(2.0 / (n_sites + 1.0));
        for (int j = 1; j <= n_sites; ++j) {
            modes.energies(j - 1) =
                (n_sites == 1) ? 0.0 : 2.0 * hopping * std::cos(pi * j / (n_sites + 1.0));
            for (int k = 1; k <= n_sites; ++k) {
                modes.profiles(k - 1, j - 1) = norm * std::sin(pi * j * k / (n_sites + 1.0));
            }
        }
        modes.uniform_mode_index = std::nullopt;
    }
    return modes;
}

} // namespace cavgrover

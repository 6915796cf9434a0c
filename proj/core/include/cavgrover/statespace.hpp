#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace cavgrover {

enum class Boundary { Periodic, Open };

enum class BasisKind { Register, Full };

/// Single-excitation register basis: N collective atomic states |psi_n;0>
/// (atom n in |1>, zero photons) followed by the common-mode photon state
/// |psi_0;1>. Index n-1 <-> |psi_n;0>, index N <-> |psi_0;1>.
struct RegisterBasis {
    int n_qubits = 0;
    std::vector<std::string> labels;

    int dimension() const { return n_qubits + 1; }
    int photon_index() const { return n_qubits; }
};

/// Single-excitation basis of the full model: for each site k (1-based) the
/// three states (photon in local mode k, atom k in |e>, atom k in |1>), in
/// that order, grouped by site. Every label carries exactly one excitation.
struct FullBasis {
    int n_qubits = 0;
    std::vector<std::string> labels;

    int dimension() const { return 3 * n_qubits; }
    int photon_index(int site) const { return 3 * (site - 1); }
    int excited_index(int site) const { return 3 * (site - 1) + 1; }
    int qubit_index(int site) const { return 3 * (site - 1) + 2; }
};

/// Photonic eigenmodes of the hopping lattice. Column j of `profiles` is the
/// j-th mode over local cavity modes; `energies[j]` is its frequency relative
/// to the bare cavity frequency. For a ring the uniform mode (all amplitudes
/// 1/sqrt(N)) exists exactly with energy 2J and its index is reported;
/// an open chain has no uniform mode and the index is absent.
struct BlochModes {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd profiles;
    std::optional<int> uniform_mode_index;

    int n_modes() const { return static_cast<int>(energies.size()); }
};

/// Amplitude vector over a RegisterBasis or a FullBasis.
struct RegisterState {
    Eigen::VectorXcd amplitudes;
    BasisKind basis = BasisKind::Register;
    int n_qubits = 0;

    double norm() const { return amplitudes.norm(); }
};

RegisterBasis build_register_basis(int n_qubits);

FullBasis build_full_basis(int n_qubits);

/// Equal-amplitude single-excitation register state: 1/sqrt(N) on every
/// |psi_n;0>, zero photonic amplitude.
RegisterState w_state(int n_qubits);

/// Register state |psi_0;1> (one photon in the common mode, all qubits |0>).
RegisterState photon_state(int n_qubits);

/// Hopping matrix J * sum_k (a_k^dag a_{k+1} + h.c.) over local photon modes,
/// with the k = N term wrapping to k = 1 for a ring and dropped for an open
/// chain. N = 1 has no neighbours and yields the zero matrix.
Eigen::MatrixXd hopping_matrix(int n_sites, double hopping, Boundary boundary);

/// Eigenmodes of hopping_matrix. Ring modes are the exact Fourier modes with
/// energies 2J cos(2 pi j / N), j = 0..N-1; open-chain modes are the exact
/// sine modes with energies 2J cos(pi j / (N+1)), j = 1..N.
BlochModes bloch_modes(int n_sites, double hopping, Boundary boundary);

} // namespace cavgrover

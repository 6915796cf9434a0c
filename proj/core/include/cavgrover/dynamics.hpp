#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cavgrover/integrator.hpp"
#include "cavgrover/params.hpp"
#include "cavgrover/pulses.hpp"
#include "cavgrover/statespace.hpp"

namespace cavgrover {

/// Two-level propagator parameters of the bright-photon pair. `a` is the
/// diagonal (bright-to-bright) amplitude, `b` the transfer amplitude;
/// |a|^2 + |b|^2 = 1.
struct PropagatorAB {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};
};

/// Per-qubit Hamiltonian couplings induced by the schedule pulses at time t.
/// A global pulse contributes ratio_i * envelope/(2 sqrt(N)) to every qubit,
/// a local pulse ratio_k * envelope/2 to its target only. `ratios` are the
/// per-qubit coupling scale factors g'_i / g' (empty = uniform 1).
Eigen::VectorXd schedule_couplings(const std::vector<Pulse>& pulses, double t, int n,
                                   const Eigen::VectorXd& ratios = {});

/// Sum of the detuning offsets of the pulses active at time t.
double schedule_detuning(const std::vector<Pulse>& pulses, double t);

/// Collective-state Hamiltonian: coupling_i between |psi_i;0> and |psi_0;1>,
/// diagonal (Delta' - delta) + pulse_detuning on |psi_0;1>, optional
/// per-qubit diagonal offsets on the register states (cavity-frequency
/// disorder). Dimension (N+1) x (N+1) with N = couplings.size().
void fill_effective_hamiltonian(Eigen::MatrixXcd& h, const EffectiveParams& ep,
                                const Eigen::VectorXd& couplings, double pulse_detuning = 0.0,
                                const Eigen::VectorXd& register_diag = {});

Eigen::MatrixXcd build_effective_hamiltonian(const EffectiveParams& ep,
                                             const Eigen::VectorXd& couplings,
                                             double pulse_detuning = 0.0,
                                             const Eigen::VectorXd& register_diag = {});

/// Per-atom laser Rabi amplitudes Omega_k(t) realizing the schedule's
/// collective envelopes in the full model: a global pulse maps to
/// Omega(t) = Delta * envelope(t) / (sqrt(N) g) on every atom, a local pulse
/// to Delta * envelope(t) / g on its target.
Eigen::VectorXd full_laser_amplitudes(const std::vector<Pulse>& pulses, const ProtocolParams& p,
                                      double t);

/// Single-excitation Hamiltonian of the cavity array in the interaction
/// picture: photon hopping J between neighbouring local modes, atom-cavity
/// coupling g e^{-i Delta t} between (photon k) and (atom k in |e>), laser
/// coupling Omega_k(t)/2 e^{-i Delta t} between (atom k in |e>) and
/// (atom k in |1>). Dimension 3N x 3N, basis order per FullBasis.
void fill_full_hamiltonian(Eigen::MatrixXcd& h, const ProtocolParams& p,
                           const Eigen::VectorXd& omega_at_t, double t,
                           const Eigen::MatrixXd& hop);

Eigen::MatrixXcd build_full_hamiltonian(const ProtocolParams& p,
                                        const Eigen::VectorXd& omega_at_t, double t);

/// Time-dependent Hamiltonian written into a pre-sized matrix.
using HamiltonianProvider = std::function<void(double t, Eigen::MatrixXcd& h)>;

/// Integrate i d/dt psi = H(t) psi - i diag(decay_rates/2) psi from t0 to t1.
/// `decay_rates` lists per-basis-state amplitude decay rates (empty = none);
/// with nonzero rates the norm decreases monotonically. The observer, when
/// given, fires on the fixed sample grid.
RegisterState evolve(const HamiltonianProvider& h_of_t, const RegisterState& psi0, double t0,
                     double t1, const IntegratorOptions& opts = {},
                     const Eigen::VectorXd& decay_rates = {}, double sample_dt = 0.0,
                     const SampleObserver& observer = nullptr);

/// Integrate the bright-photon two-level problem over the pulse support:
/// coupling coupling_scale * envelope(t)/2, detuning pulse.detuning +
/// extra_detuning on the photonic state. Returns the bright-row elements
/// a = <B|U|B>, b = <B|U|psi_0;1>. An off or zero-area pulse yields the
/// identity (a=1, b=0).
PropagatorAB two_level_ab(const Pulse& pulse, double coupling_scale = 1.0,
                          double extra_detuning = 0.0, const IntegratorOptions& opts = {});

/// Analytic propagator of the collective model for couplings g'_i and
/// two-level parameters (a, b):
///   U_ij   = delta_ij + (a - 1) g'_i g'_j / chi^2
///   U_iN   = b g'_i / chi,   U_Ni = -conj(b) g'_i / chi,   U_NN = conj(a)
/// with chi^2 = sum_i g'_i^2. Throws SingularParameterError when chi = 0.
Eigen::MatrixXcd analytic_propagator(const Eigen::VectorXd& couplings, const PropagatorAB& ab);

/// Effective-tier model bundle: parameters, drive pulses and static disorder,
/// ready to serve as a HamiltonianProvider.
struct EffectiveModel {
    EffectiveParams ep;
    int n = 1;
    std::vector<Pulse> drive;
    Eigen::VectorXd coupling_ratios; // empty = uniform
    Eigen::VectorXd register_diag;   // empty = zero
    double kappa = 0.0;

    void fill(double t, Eigen::MatrixXcd& h) const;
    HamiltonianProvider provider() const;
    Eigen::VectorXd decay_rates() const; // kappa on the photonic entry
};

/// Full-tier model bundle with the cached hopping matrix.
struct FullModel {
    ProtocolParams params;
    std::vector<Pulse> drive;
    Eigen::MatrixXd hop;

    static FullModel make(const ProtocolParams& params, std::vector<Pulse> drive);
    void fill(double t, Eigen::MatrixXcd& h) const;
    HamiltonianProvider provider() const;
    Eigen::VectorXd decay_rates() const; // kappa on every photonic index
};

/// One photon in the uniform Bloch mode, all atoms in |0> (full basis).
RegisterState full_photon_state(int n_qubits);

/// |<atom m in |1>|psi>|^2 for a full-basis state (m is 1-based).
double full_marked_population(const RegisterState& psi, int marked);

/// Population of the uniform-mode photonic state for a full-basis state.
double full_common_mode_population(const RegisterState& psi);

/// The N populations |<atom k in |1>|psi>|^2 of a full-basis state.
Eigen::VectorXd full_register_populations(const RegisterState& psi);

} // namespace cavgrover

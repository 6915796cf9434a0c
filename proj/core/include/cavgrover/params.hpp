#pragma once

#include "cavgrover/statespace.hpp"

namespace cavgrover {

/// Physical inputs of the array. All rates share one frequency unit; hbar = 1.
/// `omega_c` is bookkeeping only: the dynamics run in the interaction
/// picture where the photonic free energy is removed.
struct ProtocolParams {
    int n = 1;                 // number of cavities / qubits
    double g = 0.0;            // atom-cavity coupling
    double omega = 0.0;        // peak laser Rabi frequency
    double delta = 1.0;        // common detuning omega_0 - omega_c
    double hopping = 0.0;      // photon hopping rate J
    double omega_c = 0.0;      // bare cavity frequency
    Boundary boundary = Boundary::Periodic;
    double kappa = 0.0;        // photonic amplitude decay rate, >= 0

    /// Dispersive-regime flags: J <= Omega/j_margin and g <= Delta/g_margin.
    bool regime_ok(double j_margin = 10.0, double g_margin = 5.0) const;

    void validate() const;
};

/// Derived effective quantities. Signs follow the closed forms
///   g' = -g*Omega/(2*Delta),  Delta' = -Omega^2/(4*Delta),
///   delta = -g^2/(Delta - 2J),  chi = sqrt(N)*g'.
struct EffectiveParams {
    double g_eff = 0.0;
    double delta_prime = 0.0;
    double delta_small = 0.0;
    double chi = 0.0;

    /// Photonic diagonal of the collective-state Hamiltonian; 0 on resonance.
    double resonance_mismatch() const { return delta_prime - delta_small; }

    /// Protocol time scale T = pi/|chi|.
    double protocol_width() const;
};

EffectiveParams effective_params(const ProtocolParams& p);

/// Laser amplitude that tunes Delta' = delta for given g, Delta, J:
/// Omega = 2 g sqrt(Delta / (Delta - 2J)). This is the experimental knob
/// that puts the global pulses on resonance.
double tuned_omega(double g, double delta, double hopping);

} // namespace cavgrover

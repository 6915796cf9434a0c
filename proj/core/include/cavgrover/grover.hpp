#pragma once

#include <string>
#include <vector>

#include "cavgrover/dynamics.hpp"
#include "cavgrover/params.hpp"
#include "cavgrover/pulses.hpp"
#include "cavgrover/statespace.hpp"

namespace cavgrover {

enum class Tier { Ideal, Effective, Full };

/// How the oracle is realized in the pulsed tiers: `Ideal` applies the exact
/// phase flip at each oracle pulse center (the net effect of a resonant local
/// 2pi pulse), `Pulsed` integrates the local pulse dynamically.
enum class OracleMode { Ideal, Pulsed };

struct ProtocolRun {
    Tier tier = Tier::Effective;
    int marked = 1;
    int iterations = -1; // < 0: use optimal_iterations(n)
    OracleMode oracle = OracleMode::Ideal;
    ProtocolParams params;
    Schedule schedule;               // empty pulses: built from defaults
    Eigen::VectorXd coupling_ratios; // per-qubit g'_i / g', empty = uniform
    Eigen::VectorXd register_diag;   // per-qubit diagonal offsets, empty = 0
    bool allow_regime_violation = false;
    IntegratorOptions integrator;
};

struct TraceEvent {
    double time = 0.0;
    std::string label;
};

/// Sampled populations along a protocol run. `pulse_width` is the reference
/// width T for the t/T axis.
struct FidelityTrace {
    std::vector<double> times;
    std::vector<double> p_marked;
    std::vector<double> p_photon;
    std::vector<double> norm;
    std::vector<TraceEvent> events;
    double pulse_width = 1.0;

    size_t size() const { return times.size(); }
};

struct MeasureSummary {
    double max_p_marked = 0.0;
    double time_of_max = 0.0;
    double final_p_marked = 0.0;
    double threshold = 0.5;
    bool success = false;
};

/// floor(pi / (4 asin(1/sqrt(N)))): the discrete optimum of the amplitude
/// rotation. Gives 0 for N = 1 and agrees with pi sqrt(N)/4 for large N.
int optimal_iterations(int n_qubits);

/// Phase flip of |psi_marked;0> (marked is 1-based).
RegisterState oracle_ideal(RegisterState psi, int marked);

/// Register block mapped by 1 - 2|W><W|, photonic amplitude negated.
RegisterState reflection_ideal(RegisterState psi);

/// Event grid of the protocol schedule, in units of the pulse width T.
struct EventGrid {
    double init = 10.0;       // init pulse center (support starts at t = 0)
    double oracle = 15.0;     // first oracle center
    double reflection = 45.0; // first reflection center
    double period = 60.0;     // per-iteration spacing
};

/// Protocol pulse sequence: a global pi sech init pulse, then per iteration
/// a local 2pi oracle pulse at (oracle + period*m) T and a global 2pi
/// reflection pulse at (reflection + period*m) T, all tuned to zero
/// detuning offset. The default grid spaces events 30T apart (15T, 45T,
/// 75T, ...). The horizon covers every pulse window plus a 5T margin;
/// sample_dt defaults to T/20.
Schedule build_schedule(int n_qubits, int iterations, double pulse_width,
                        const EffectiveParams& ep, int marked = 1,
                        const EventGrid& grid = {});

/// Dynamical oracle: evolve psi through a resonant local 2pi pulse on the
/// marked qubit under the collective-state Hamiltonian. Matches oracle_ideal
/// when the photonic amplitude is negligible.
RegisterState oracle_pulsed(const RegisterState& psi, int marked, const Pulse& pulse,
                            const EffectiveParams& ep, const IntegratorOptions& opts = {});

/// Execute the protocol at the requested tier and return the sampled trace.
FidelityTrace run_protocol(const ProtocolRun& run);

MeasureSummary measure(const FidelityTrace& trace, double threshold = 0.5);

/// Maximum of p_marked over the inter-pulse plateau following each
/// reflection pulse (from the pulse's support end to the next pulse's
/// support begin, or the horizon). One value per reflection, in time order.
std::vector<double> plateau_maxima(const FidelityTrace& trace, const Schedule& schedule);

} // namespace cavgrover

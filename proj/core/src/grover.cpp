#include "cavgrover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cavgrover/errors.hpp"

namespace cavgrover {

using std::numbers::pi;

int optimal_iterations(int n_qubits) {
    if (n_qubits < 1) {
        throw InvalidSizeError("n_qubits must be >= 1");
    }
    if (n_qubits == 1) return 0;
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_qubits)));
    return static_cast<int>(std::floor(pi / (4.0 * theta)));
}

RegisterState oracle_ideal(RegisterState psi, int marked) {
    if (psi.basis != BasisKind::Register) {
        throw InvalidSizeError("oracle_ideal expects a register-basis state");
    }
    if (marked < 1 || marked > psi.n_qubits) {
        throw InvalidSizeError("marked qubit index out of range [1, N]");
    }
    psi.amplitudes(marked - 1) = -psi.amplitudes(marked - 1);
    return psi;
}

RegisterState reflection_ideal(RegisterState psi) {
    if (psi.basis != BasisKind::Register) {
        throw InvalidSizeError("reflection_ideal expects a register-basis state");
    }
    const int n = psi.n_qubits;
    const std::complex<double> mean = psi.amplitudes.head(n).sum() / static_cast<double>(n);
    psi.amplitudes.head(n).array() -= 2.0 * mean;
    psi.amplitudes(n) = -psi.amplitudes(n);
    return psi;
}

Schedule build_schedule(int n_qubits, int iterations, double pulse_width,
                        const EffectiveParams& ep, int marked, const EventGrid& grid) {
    if (n_qubits < 1) {
        throw InvalidSizeError("n_qubits must be >= 1");
    }
    if (iterations < 0) {
        throw InvalidSizeError("iterations must be >= 0");
    }
    if (pulse_width <= 0.0) {
        throw SingularParameterError("pulse width must be > 0");
    }
    (void)ep; // pulses are tuned to zero offset from the Delta' - delta resonance

    const double t = pulse_width;
    Schedule s;
    s.pulse_width = t;
    s.sample_dt = t / 20.0;

    Pulse init = pulse_for_area(PulseShape::Sech, pi, t, grid.init * t);
    init.label = "init";
    s.pulses.push_back(init);

    for (int m = 0; m < iterations; ++m) {
        Pulse oracle = pulse_for_area(PulseShape::Sech, 2.0 * pi, t,
                                      (grid.oracle + grid.period * m) * t, 0.0,
                                      AddressingKind::Local, marked);
        oracle.label = "oracle" + std::to_string(m + 1);
        s.pulses.push_back(oracle);

        Pulse reflection = pulse_for_area(PulseShape::Sech, 2.0 * pi, t,
                                          (grid.reflection + grid.period * m) * t);
        reflection.label = "reflection" + std::to_string(m + 1);
        s.pulses.push_back(reflection);
    }

    double end = 0.0;
    for (const Pulse& p : s.pulses) end = std::max(end, p.support_end());
    s.horizon = end + 5.0 * t;
    return s;
}

RegisterState oracle_pulsed(const RegisterState& psi, int marked, const Pulse& pulse,
                            const EffectiveParams& ep, const IntegratorOptions& opts) {
    if (psi.basis != BasisKind::Register) {
        throw InvalidSizeError("oracle_pulsed expects a register-basis state");
    }
    if (pulse.addressing != AddressingKind::Local || pulse.target != marked) {
        throw InvalidSizeError("oracle pulse must locally address the marked qubit");
    }
    if (marked < 1 || marked > psi.n_qubits) {
        throw InvalidSizeError("marked qubit index out of range [1, N]");
    }
    if (pulse.shape == PulseShape::Off) {
        return psi;
    }
    EffectiveModel model;
    model.ep = ep;
    model.n = psi.n_qubits;
    model.drive = {pulse};
    return evolve(model.provider(), psi, pulse.support_begin(), pulse.support_end(), opts);
}

namespace {

struct TraceRecorder {
    FidelityTrace* trace;
    int marked = 1;

    void record_register(double t, const Eigen::VectorXcd& y) {
        if (!trace->times.empty() && t <= trace->times.back()) return;
        const auto n = y.size() - 1;
        trace->times.push_back(t);
        trace->p_marked.push_back(std::norm(y(marked - 1)));
        trace->p_photon.push_back(std::norm(y(n)));
        trace->norm.push_back(y.norm());
    }

    void record_full(double t, const Eigen::VectorXcd& y, int n_qubits) {
        if (!trace->times.empty() && t <= trace->times.back()) return;
        trace->times.push_back(t);
        trace->p_marked.push_back(std::norm(y(3 * (marked - 1) + 2)));
        std::complex<double> overlap = 0.0;
        const double amp = 1.0 / std::sqrt(static_cast<double>(n_qubits));
        for (int k = 0; k < n_qubits; ++k) overlap += amp * y(3 * k);
        trace->p_photon.push_back(std::norm(overlap));
        trace->norm.push_back(y.norm());
    }
};

FidelityTrace run_ideal(const ProtocolRun& run, int iterations) {
    FidelityTrace trace;
    trace.pulse_width = 1.0;
    RegisterState psi = w_state(run.params.n);
    auto sample = [&](double t) {
        trace.times.push_back(t);
        trace.p_marked.push_back(std::norm(psi.amplitudes(run.marked - 1)));
        trace.p_photon.push_back(std::norm(psi.amplitudes(run.params.n)));
        trace.norm.push_back(psi.norm());
    };
    trace.events.push_back({0.0, "init"});
    sample(0.0);
    for (int m = 1; m <= iterations; ++m) {
        psi = oracle_ideal(std::move(psi), run.marked);
        trace.events.push_back({2.0 * m - 1.0, "oracle" + std::to_string(m)});
        sample(2.0 * m - 1.0);
        psi = reflection_ideal(std::move(psi));
        trace.events.push_back({2.0 * m, "reflection" + std::to_string(m)});
        sample(2.0 * m);
    }
    return trace;
}

// Integrate the schedule with instantaneous phase flips at the centers of
// the pulses excluded from the drive (ideal-oracle mode).
FidelityTrace run_pulsed(const ProtocolRun& run, const Schedule& schedule,
                         const EffectiveParams& ep) {
    const int n = run.params.n;
    const bool full_tier = run.tier == Tier::Full;

    std::vector<Pulse> drive;
    std::vector<double> flip_times;
    for (const Pulse& p : schedule.pulses) {
        if (run.oracle == OracleMode::Ideal && p.addressing == AddressingKind::Local) {
            flip_times.push_back(p.center);
        } else {
            drive.push_back(p);
        }
    }
    std::sort(flip_times.begin(), flip_times.end());

    FidelityTrace trace;
    trace.pulse_width = schedule.pulse_width;
    for (const Pulse& p : schedule.pulses) trace.events.push_back({p.center, p.label});
    std::sort(trace.events.begin(), trace.events.end(),
              [](const TraceEvent& a, const TraceEvent& b) { return a.time < b.time; });

    TraceRecorder recorder{&trace, run.marked};

    RegisterState psi;
    EffectiveModel eff;
    FullModel full;
    HamiltonianProvider h_of_t;
    Eigen::VectorXd decay;
    SampleObserver observer;

    if (full_tier) {
        full = FullModel::make(run.params, drive);
        h_of_t = full.provider();
        decay = full.decay_rates();
        psi = full_photon_state(n);
        observer = [&](double t, const Eigen::VectorXcd& y) { recorder.record_full(t, y, n); };
    } else {
        eff.ep = ep;
        eff.n = n;
        eff.drive = drive;
        eff.coupling_ratios = run.coupling_ratios;
        eff.register_diag = run.register_diag;
        eff.kappa = run.params.kappa;
        h_of_t = eff.provider();
        decay = eff.decay_rates();
        psi = photon_state(n);
        observer = [&](double t, const Eigen::VectorXcd& y) { recorder.record_register(t, y); };
    }

    double t = 0.0;
    for (const Pulse& p : schedule.pulses) t = std::min(t, p.support_begin());
    const int flip_index_marked = full_tier ? 3 * (run.marked - 1) + 2 : run.marked - 1;
    for (double t_flip : flip_times) {
        psi = evolve(h_of_t, psi, t, t_flip, run.integrator, decay, schedule.sample_dt, observer);
        psi.amplitudes(flip_index_marked) = -psi.amplitudes(flip_index_marked);
        t = t_flip;
    }
    psi = evolve(h_of_t, psi, t, schedule.horizon, run.integrator, decay, schedule.sample_dt,
                 observer);
    return trace;
}

} // namespace

FidelityTrace run_protocol(const ProtocolRun& run) {
    run.params.validate();
    if (run.marked < 1 || run.marked > run.params.n) {
        throw InvalidSizeError("marked qubit index out of range [1, N]");
    }
    int iterations = run.iterations;
    if (iterations < 0) iterations = optimal_iterations(run.params.n);

    if (run.tier != Tier::Effective &&
        (run.coupling_ratios.size() != 0 || run.register_diag.size() != 0)) {
        throw InvalidSizeError("disorder vectors apply to the effective tier only");
    }

    if (run.tier == Tier::Ideal) {
        return run_ideal(run, iterations);
    }

    if (run.tier == Tier::Full && !run.params.regime_ok() && !run.allow_regime_violation) {
        throw SingularParameterError(
            "full-tier run outside the dispersive regime (J << Omega, g << Delta); "
            "set allow_regime_violation to proceed");
    }

    const EffectiveParams ep = effective_params(run.params);
    Schedule schedule = run.schedule;
    if (schedule.pulses.empty()) {
        schedule = build_schedule(run.params.n, iterations, ep.protocol_width(), ep, run.marked);
    }
    if (schedule.pulse_width <= 0.0) {
        schedule.pulse_width = ep.protocol_width();
    }
    if (schedule.horizon <= 0.0) {
        for (const Pulse& p : schedule.pulses) {
            schedule.horizon = std::max(schedule.horizon, p.support_end());
        }
        schedule.horizon += 5.0 * schedule.pulse_width;
    }
    if (schedule.sample_dt <= 0.0) {
        schedule.sample_dt = schedule.pulse_width / 20.0;
    }
    return run_pulsed(run, schedule, ep);
}

MeasureSummary measure(const FidelityTrace& trace, double threshold) {
    if (trace.times.empty()) {
        throw InvalidSizeError("cannot measure an empty trace");
    }
    MeasureSummary summary;
    summary.threshold = threshold;
    summary.max_p_marked = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < trace.times.size(); ++i) {
        if (trace.p_marked[i] > summary.max_p_marked) {
            summary.max_p_marked = trace.p_marked[i];
            summary.time_of_max = trace.times[i];
        }
    }
    summary.final_p_marked = trace.p_marked.back();
    summary.success = summary.max_p_marked >= threshold;
    return summary;
}

std::vector<double> plateau_maxima(const FidelityTrace& trace, const Schedule& schedule) {
    std::vector<const Pulse*> ordered;
    for (const Pulse& p : schedule.pulses) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(),
              [](const Pulse* a, const Pulse* b) { return a->center < b->center; });

    std::vector<double> maxima;
    for (size_t i = 0; i < ordered.size(); ++i) {
        if (ordered[i]->label.rfind("reflection", 0) != 0) continue;
        const double begin = ordered[i]->support_end();
        const double end =
            (i + 1 < ordered.size()) ? ordered[i + 1]->support_begin() : schedule.horizon;
        double peak = 0.0;
        for (size_t s = 0; s < trace.times.size(); ++s) {
            if (trace.times[s] >= begin && trace.times[s] <= end) {
                peak = std::max(peak, trace.p_marked[s]);
            }
        }
        maxima.push_back(peak);
    }
    return maxima;
}

} // namespace cavgrover

#pragma once

#include <string>
#include <vector>

namespace cavgrover {

enum class PulseShape { Sech, Square, Off };

enum class AddressingKind { Global, Local };

/// Laser pulse envelope. `peak` is the peak of the Rabi-frequency envelope:
/// for global addressing this is the collective Rabi frequency (each qubit
/// sees peak/sqrt(N)), for local addressing the individual one. A driven
/// two-level pair picks up the Hamiltonian matrix element envelope/2, so a
/// resonant pi-area pulse fully transfers and a 2pi-area pulse returns with
/// a -1 phase. `detuning` is the offset added to the photonic diagonal while
/// the pulse is active; 0 means tuned to the Delta' - delta = 0 resonance.
struct Pulse {
    PulseShape shape = PulseShape::Off;
    double peak = 0.0;
    double width = 1.0;        // sech scale parameter T, or square duration
    double center = 0.0;
    double detuning = 0.0;
    AddressingKind addressing = AddressingKind::Global;
    int target = 1;            // 1-based qubit index, used for Local addressing
    double window = 10.0;      // sech support is |t - center| <= window * width
    std::string label;

    bool active_at(double t) const;
    double support_begin() const;
    double support_end() const;
};

/// Ordered pulse sequence with a simulation horizon and an output sampling
/// interval. `pulse_width` records the reference width T used for the t/T
/// time axis in exported traces.
struct Schedule {
    std::vector<Pulse> pulses;
    double horizon = 0.0;
    double sample_dt = 0.0;
    double pulse_width = 0.0;
};

/// Rabi-frequency envelope at time t. Sech pulses are exactly zero outside
/// the truncation window so schedules compose from compactly supported
/// pieces.
double envelope(const Pulse& p, double t);

/// Area of the untruncated ideal shape: pi*peak*T for sech, peak*T for
/// square, 0 for off.
double pulse_area(const Pulse& p);

/// Solve the peak from the closed-form area. Area 0 yields an off pulse.
Pulse pulse_for_area(PulseShape shape, double area, double width, double center,
                     double detuning = 0.0,
                     AddressingKind addressing = AddressingKind::Global, int target = 1);

} // namespace cavgrover

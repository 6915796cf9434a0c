#include "cavgrover/pulses.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cavgrover/errors.hpp"

namespace cavgrover {

bool Pulse::active_at(double t) const {
    if (shape == PulseShape::Off) return false;
    return t >= support_begin() && t <= support_end();
}

double Pulse::support_begin() const {
    switch (shape) {
        case PulseShape::Sech: return center - window * width;
        case PulseShape::Square: return center - 0.5 * width;
        case PulseShape::Off: return center;
    }
    return center;
}

double Pulse::support_end() const {
    switch (shape) {
        case PulseShape::Sech: return center + window * width;
        case PulseShape::Square: return center + 0.5 * width;
        case PulseShape::Off: return center;
    }
    return center;
}

double envelope(const Pulse& p, double t) {
    switch (p.shape) {
        case PulseShape::Sech: {
            const double u = (t - p.center) / p.width;
            if (std::abs(u) > p.window) return 0.0;
            return p.peak / std::cosh(u);
        }
        case PulseShape::Square:
            return (std::abs(t - p.center) <= 0.5 * p.width) ? p.peak : 0.0;
        case PulseShape::Off:
            return 0.0;
    }
    return 0.0;
}

double pulse_area(const Pulse& p) {
    switch (p.shape) {
        case PulseShape::Sech: return std::numbers::pi * p.peak * p.width;
        case PulseShape::Square: return p.peak * p.width;
        case PulseShape::Off: return 0.0;
    }
    return 0.0;
}

Pulse pulse_for_area(PulseShape shape, double area, double width, double center,
                     double detuning, AddressingKind addressing, int target) {
    if (width <= 0.0 || !std::isfinite(width)) {
        throw SingularParameterError("pulse width must be > 0 (got " + std::to_string(width) + ")");
    }
    if (area < 0.0 || !std::isfinite(area)) {
        throw SingularParameterError("pulse area must be >= 0 (got " + std::to_string(area) + ")");
    }
    Pulse p;
    p.width = width;
    p.center = center;
    p.detuning = detuning;
    p.addressing = addressing;
    p.target = target;
    if (area == 0.0) {
        p.shape = PulseShape::Off;
        p.peak = 0.0;
        return p;
    }
    p.shape = shape;
    switch (shape) {
        case PulseShape::Sech: p.peak = area / (std::numbers::pi * width); break;
        case PulseShape::Square: p.peak = area / width; break;
        case PulseShape::Off: p.peak = 0.0; break;
    }
    return p;
}

} // namespace cavgrover

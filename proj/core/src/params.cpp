#include "cavgrover/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cavgrover/errors.hpp"

namespace cavgrover {

bool ProtocolParams::regime_ok(double j_margin, double g_margin) const {
    return std::abs(hopping) <= std::abs(omega) / j_margin &&
           std::abs(g) <= std::abs(delta) / g_margin;
}

void ProtocolParams::validate() const {
    if (n < 1) {
        throw InvalidSizeError("n must be >= 1 (got " + std::to_string(n) + ")");
    }
    for (double v : {g, omega, delta, hopping, omega_c, kappa}) {
        if (!std::isfinite(v)) {
            throw SingularParameterError("all rates must be finite");
        }
    }
    if (kappa < 0.0) {
        throw SingularParameterError("kappa must be >= 0 (got " + std::to_string(kappa) + ")");
    }
    if (delta == 0.0) {
        throw SingularParameterError("delta must be nonzero (Delta' pole)");
    }
    if (delta == 2.0 * hopping) {
        throw SingularParameterError("delta must differ from 2*j (delta pole at Delta = 2J)");
    }
}

double EffectiveParams::protocol_width() const {
    if (chi == 0.0) {
        throw SingularParameterError("chi = 0: protocol width undefined");
    }
    return std::numbers::pi / std::abs(chi);
}

EffectiveParams effective_params(const ProtocolParams& p) {
    p.validate();
    EffectiveParams ep;
    ep.g_eff = -p.g * p.omega / (2.0 * p.delta);
    ep.delta_prime = -p.omega * p.omega / (4.0 * p.delta);
    ep.delta_small = -p.g * p.g / (p.delta - 2.0 * p.hopping);
    ep.chi = std::sqrt(static_cast<double>(p.n)) * ep.g_eff;
    return ep;
}

double tuned_omega(double g, double delta, double hopping) {
    const double ratio = delta / (delta - 2.0 * hopping);
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw SingularParameterError(
            "no real tuned omega: delta/(delta - 2*j) must be positive and finite");
    }
    return 2.0 * std::abs(g) * std::sqrt(ratio);
}

} // namespace cavgrover

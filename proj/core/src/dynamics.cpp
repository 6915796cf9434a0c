#include "cavgrover/dynamics.hpp"

#include <cmath>
#include <complex>

#include "cavgrover/errors.hpp"

namespace cavgrover {

using std::complex;
namespace {
constexpr complex<double> kI{0.0, 1.0};
}

Eigen::VectorXd schedule_couplings(const std::vector<Pulse>& pulses, double t, int n,
                                   const Eigen::VectorXd& ratios) {
    if (ratios.size() != 0 && ratios.size() != n) {
        throw InvalidSizeError("coupling ratio vector must have one entry per qubit");
    }
    Eigen::VectorXd couplings = Eigen::VectorXd::Zero(n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (const Pulse& p : pulses) {
        const double amp = envelope(p, t);
        if (amp == 0.0) continue;
        if (p.addressing == AddressingKind::Global) {
            couplings.array() += 0.5 * amp * inv_sqrt_n;
        } else {
            if (p.target < 1 || p.target > n) {
                throw InvalidSizeError("local pulse target out of range");
            }
            couplings(p.target - 1) += 0.5 * amp;
        }
    }
    if (ratios.size() != 0) {
        couplings.array() *= ratios.array();
    }
    return couplings;
}

double schedule_detuning(const std::vector<Pulse>& pulses, double t) {
    double d = 0.0;
    for (const Pulse& p : pulses) {
        if (p.active_at(t)) d += p.detuning;
    }
    return d;
}

void fill_effective_hamiltonian(Eigen::MatrixXcd& h, const EffectiveParams& ep,
                                const Eigen::VectorXd& couplings, double pulse_detuning,
                                const Eigen::VectorXd& register_diag) {
    const auto n = couplings.size();
    if (register_diag.size() != 0 && register_diag.size() != n) {
        throw InvalidSizeError("register diagonal offset vector must have one entry per qubit");
    }
    if (h.rows() != n + 1 || h.cols() != n + 1) {
        h.resize(n + 1, n + 1);
    }
    h.setZero();
    for (Eigen::Index k = 0; k < n; ++k) {
        h(k, n) = couplings(k);
        h(n, k) = couplings(k);
        if (register_diag.size() != 0) h(k, k) = register_diag(k);
    }
    h(n, n) = ep.resonance_mismatch() + pulse_detuning;
}

Eigen::MatrixXcd build_effective_hamiltonian(const EffectiveParams& ep,
                                             const Eigen::VectorXd& couplings,
                                             double pulse_detuning,
                                             const Eigen::VectorXd& register_diag) {
    Eigen::MatrixXcd h;
    fill_effective_hamiltonian(h, ep, couplings, pulse_detuning, register_diag);
    return h;
}

Eigen::VectorXd full_laser_amplitudes(const std::vector<Pulse>& pulses, const ProtocolParams& p,
                                      double t) {
    if (p.g == 0.0) {
        throw SingularParameterError("full model drive mapping requires g != 0");
    }
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(p.n);
    const double global_scale = p.delta / (std::sqrt(static_cast<double>(p.n)) * p.g);
    const double local_scale = p.delta / p.g;
    for (const Pulse& pulse : pulses) {
        const double amp = envelope(pulse, t);
        if (amp == 0.0) continue;
        if (pulse.addressing == AddressingKind::Global) {
            omega.array() += global_scale * amp;
        } else {
            if (pulse.target < 1 || pulse.target > p.n) {
                throw InvalidSizeError("local pulse target out of range");
            }
            omega(pulse.target - 1) += local_scale * amp;
        }
    }
    return omega;
}

void fill_full_hamiltonian(Eigen::MatrixXcd& h, const ProtocolParams& p,
                           const Eigen::VectorXd& omega_at_t, double t,
                           const Eigen::MatrixXd& hop) {
    if (omega_at_t.size() != p.n) {
        throw InvalidSizeError("per-atom laser amplitude vector must have one entry per atom");
    }
    const int dim = 3 * p.n;
    if (h.rows() != dim || h.cols() != dim) {
        h.resize(dim, dim);
    }
    h.setZero();
    const complex<double> phase = std::exp(-kI * p.delta * t);
    for (int k = 0; k < p.n; ++k) {
        const int ph = 3 * k, ex = 3 * k + 1, qb = 3 * k + 2;
        h(ph, ex) = p.g * phase;
        h(ex, ph) = std::conj(h(ph, ex));
        h(qb, ex) = 0.5 * omega_at_t(k) * phase;
        h(ex, qb) = std::conj(h(qb, ex));
        for (int l = 0; l < p.n; ++l) {
            if (hop(k, l) != 0.0) h(ph, 3 * l) += hop(k, l);
        }
    }
}

Eigen::MatrixXcd build_full_hamiltonian(const ProtocolParams& p,
                                        const Eigen::VectorXd& omega_at_t, double t) {
    Eigen::MatrixXcd h;
    fill_full_hamiltonian(h, p, omega_at_t, t, hopping_matrix(p.n, p.hopping, p.boundary));
    return h;
}

RegisterState evolve(const HamiltonianProvider& h_of_t, const RegisterState& psi0, double t0,
                     double t1, const IntegratorOptions& opts,
                     const Eigen::VectorXd& decay_rates, double sample_dt,
                     const SampleObserver& observer) {
    const auto dim = psi0.amplitudes.size();
    if (decay_rates.size() != 0 && decay_rates.size() != dim) {
        throw InvalidSizeError("decay rate vector must match the state dimension");
    }
    Eigen::MatrixXcd h(dim, dim);
    const bool lossy = decay_rates.size() != 0;
    OdeRhs rhs = [&](double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt) {
        h_of_t(t, h);
        dydt.noalias() = -kI * (h * y);
        if (lossy) {
            dydt.array() -= (0.5 * decay_rates.array()).cast<complex<double>>() * y.array();
        }
    };
    RegisterState out = psi0;
    integrate_adaptive(rhs, out.amplitudes, t0, t1, opts, sample_dt, observer);
    return out;
}

PropagatorAB two_level_ab(const Pulse& pulse, double coupling_scale, double extra_detuning,
                          const IntegratorOptions& opts) {
    PropagatorAB ab;
    if (pulse.shape == PulseShape::Off || pulse.peak == 0.0 || coupling_scale == 0.0) {
        return ab; // identity
    }
    const double t0 = pulse.support_begin();
    const double t1 = pulse.support_end();
    const double detuning = pulse.detuning + extra_detuning;

    // Integrate the 2x2 propagator as a flattened column-major 4-vector.
    Eigen::VectorXcd u(4);
    u << 1.0, 0.0, 0.0, 1.0;
    OdeRhs rhs = [&](double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt) {
        const double c = 0.5 * coupling_scale * envelope(pulse, t);
        // H = [[0, c], [c, D]]; dU/dt = -i H U, U columns stacked.
        dydt(0) = -kI * (c * y(1));
        dydt(1) = -kI * (c * y(0) + detuning * y(1));
        dydt(2) = -kI * (c * y(3));
        dydt(3) = -kI * (c * y(2) + detuning * y(3));
    };
    integrate_adaptive(rhs, u, t0, t1, opts);
    ab.a = u(0); // <B|U|B>
    ab.b = u(2); // <B|U|p>
    return ab;
}

Eigen::MatrixXcd analytic_propagator(const Eigen::VectorXd& couplings, const PropagatorAB& ab) {
    const auto n = couplings.size();
    if (n < 1) {
        throw InvalidSizeError("analytic_propagator requires at least one qubit");
    }
    const double chi_sq = couplings.squaredNorm();
    if (chi_sq == 0.0) {
        throw SingularParameterError("degenerate coupling: chi = 0");
    }
    const double norm_check = std::norm(ab.a) + std::norm(ab.b);
    if (std::abs(norm_check - 1.0) > 1e-6) {
        throw SingularParameterError("propagator parameters violate |a|^2 + |b|^2 = 1");
    }
    const double chi = std::sqrt(chi_sq);
    const Eigen::VectorXd v = couplings / chi;

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    const complex<double> am1 = ab.a - 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            u(i, j) = am1 * v(i) * v(j);
        }
        u(i, i) += 1.0;
        u(i, n) = ab.b * v(i);
        u(n, i) = -std::conj(ab.b) * v(i);
    }
    u(n, n) = std::conj(ab.a);
    return u;
}

void EffectiveModel::fill(double t, Eigen::MatrixXcd& h) const {
    const Eigen::VectorXd couplings = schedule_couplings(drive, t, n, coupling_ratios);
    fill_effective_hamiltonian(h, ep, couplings, schedule_detuning(drive, t), register_diag);
}

HamiltonianProvider EffectiveModel::provider() const {
    return [this](double t, Eigen::MatrixXcd& h) { fill(t, h); };
}

Eigen::VectorXd EffectiveModel::decay_rates() const {
    if (kappa == 0.0) return {};
    Eigen::VectorXd rates = Eigen::VectorXd::Zero(n + 1);
    rates(n) = kappa;
    return rates;
}

FullModel FullModel::make(const ProtocolParams& params, std::vector<Pulse> drive) {
    FullModel m;
    m.params = params;
    m.drive = std::move(drive);
    m.hop = hopping_matrix(params.n, params.hopping, params.boundary);
    return m;
}

void FullModel::fill(double t, Eigen::MatrixXcd& h) const {
    fill_full_hamiltonian(h, params, full_laser_amplitudes(drive, params, t), t, hop);
}

HamiltonianProvider FullModel::provider() const {
    return [this](double t, Eigen::MatrixXcd& h) { fill(t, h); };
}

Eigen::VectorXd FullModel::decay_rates() const {
    if (params.kappa == 0.0) return {};
    Eigen::VectorXd rates = Eigen::VectorXd::Zero(3 * params.n);
    for (int k = 0; k < params.n; ++k) rates(3 * k) = params.kappa;
    return rates;
}

RegisterState full_photon_state(int n_qubits) {
    if (n_qubits < 1) {
        throw InvalidSizeError("n_qubits must be >= 1");
    }
    RegisterState state;
    state.basis = BasisKind::Full;
    state.n_qubits = n_qubits;
    state.amplitudes = Eigen::VectorXcd::Zero(3 * n_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (int k = 0; k < n_qubits; ++k) state.amplitudes(3 * k) = amp;
    return state;
}

double full_marked_population(const RegisterState& psi, int marked) {
    if (psi.basis != BasisKind::Full) {
        throw InvalidSizeError("full_marked_population expects a full-basis state");
    }
    if (marked < 1 || marked > psi.n_qubits) {
        throw InvalidSizeError("marked qubit index out of range");
    }
    return std::norm(psi.amplitudes(3 * (marked - 1) + 2));
}

double full_common_mode_population(const RegisterState& psi) {
    if (psi.basis != BasisKind::Full) {
        throw InvalidSizeError("full_common_mode_population expects a full-basis state");
    }
    complex<double> overlap = 0.0;
    const double amp = 1.0 / std::sqrt(static_cast<double>(psi.n_qubits));
    for (int k = 0; k < psi.n_qubits; ++k) overlap += amp * psi.amplitudes(3 * k);
    return std::norm(overlap);
}

Eigen::VectorXd full_register_populations(const RegisterState& psi) {
    if (psi.basis != BasisKind::Full) {
        throw InvalidSizeError("full_register_populations expects a full-basis state");
    }
    Eigen::VectorXd pops(psi.n_qubits);
    for (int k = 0; k < psi.n_qubits; ++k) pops(k) = std::norm(psi.amplitudes(3 * k + 2));
    return pops;
}

} // namespace cavgrover

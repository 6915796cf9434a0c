#include "cavgrover/validate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cavgrover/dynamics.hpp"
#include "cavgrover/grover.hpp"
#include "cavgrover/robustness.hpp"
#include "cavgrover/statespace.hpp"

namespace cavgrover {

namespace {

using std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

ProtocolParams tuned_params(int n) {
    ProtocolParams p;
    p.n = n;
    p.g = 105.0;
    p.delta = 1050.0;
    p.hopping = 1.0;
    p.omega = tuned_omega(p.g, p.delta, p.hopping);
    return p;
}

CheckResult check_closed_form_grover() {
    CheckResult c{"closed_form_grover", true, ""};
    double worst = 0.0;
    for (int n : {2, 4, 8, 16}) {
        const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
        for (int k = 0; k <= 5; ++k) {
            ProtocolRun run;
            run.tier = Tier::Ideal;
            run.marked = 1 + (k % n);
            run.iterations = k;
            run.params.n = n;
            run.params.delta = 1.0;
            const FidelityTrace trace = run_protocol(run);
            const double expected = std::pow(std::sin((2.0 * k + 1.0) * theta), 2);
            worst = std::max(worst, std::abs(trace.p_marked.back() - expected));
        }
    }
    c.pass = worst < 1e-12;
    c.detail = "max |p - sin^2((2k+1)theta)| = " + fmt(worst);
    return c;
}

CheckResult check_householder_reflection() {
    CheckResult c{"householder_reflection", true, ""};
    const int n = 4;
    const ProtocolParams params = tuned_params(n);
    const EffectiveParams ep = effective_params(params);
    const double width = ep.protocol_width();
    const Pulse pulse = pulse_for_area(PulseShape::Sech, 2.0 * pi, width, 0.0);

    EffectiveModel model;
    model.ep = ep;
    model.n = n;
    model.drive = {pulse};

    double worst = 0.0;
    for (int col = 0; col < n; ++col) {
        RegisterState basis_col;
        basis_col.n_qubits = n;
        basis_col.amplitudes = Eigen::VectorXcd::Zero(n + 1);
        basis_col.amplitudes(col) = 1.0;
        const RegisterState out =
            evolve(model.provider(), basis_col, pulse.support_begin(), pulse.support_end());
        for (int row = 0; row < n; ++row) {
            const double expected = (row == col ? 1.0 : 0.0) - 2.0 / n;
            worst = std::max(worst, std::abs(out.amplitudes(row) - expected));
        }
    }
    c.pass = worst < 1e-3;
    c.detail = "max |U_reg - (1 - 2|W><W|)| = " + fmt(worst);
    return c;
}

CheckResult check_w_state_preparation() {
    CheckResult c{"w_state_preparation", true, ""};
    const int n = 8;
    const ProtocolParams params = tuned_params(n);
    const EffectiveParams ep = effective_params(params);
    const double width = ep.protocol_width();
    Pulse pulse = pulse_for_area(PulseShape::Sech, pi, width, 0.0);
    pulse.center = pulse.window * width;

    EffectiveModel model;
    model.ep = ep;
    model.n = n;
    model.drive = {pulse};

    const RegisterState out =
        evolve(model.provider(), photon_state(n), 0.0, pulse.support_end());
    const RegisterState w = w_state(n);
    const double overlap = std::norm(w.amplitudes.dot(out.amplitudes));
    c.pass = overlap >= 0.999;
    c.detail = "|<W|psi>|^2 = " + fmt(overlap);
    return c;
}

CheckResult check_propagator_equivalence() {
    CheckResult c{"propagator_equivalence", true, ""};
    const int n = 4;
    const ProtocolParams params = tuned_params(n);
    const EffectiveParams ep = effective_params(params);
    const double width = ep.protocol_width();

    DisorderSpec spec;
    spec.relative_sigma = 0.2;
    spec.seed = 7;
    const DisorderDraw draw = sample_disorder(spec, ep, n, 0);

    double worst = 0.0;
    for (double area : {pi, 2.0 * pi}) {
        for (bool disordered : {false, true}) {
            const Pulse pulse = pulse_for_area(PulseShape::Sech, area, width, 0.0);
            Eigen::VectorXd ratios = Eigen::VectorXd::Ones(n);
            if (disordered) ratios = draw.coupling_ratios;

            EffectiveModel model;
            model.ep = ep;
            model.n = n;
            model.drive = {pulse};
            model.coupling_ratios = ratios;

            const double scale = std::sqrt(ratios.squaredNorm() / n);
            const PropagatorAB ab = two_level_ab(pulse, scale);
            const Eigen::MatrixXcd analytic = analytic_propagator(ratios, ab);

            RegisterState psi;
            psi.n_qubits = n;
            psi.amplitudes = Eigen::VectorXcd::Zero(n + 1);
            psi.amplitudes(n) = 1.0;
            const RegisterState evolved =
                evolve(model.provider(), psi, pulse.support_begin(), pulse.support_end());
            const Eigen::VectorXcd predicted = analytic * psi.amplitudes;
            worst = std::max(worst, (predicted - evolved.amplitudes).cwiseAbs().maxCoeff());
        }
    }
    c.pass = worst < 1e-5;
    c.detail = "max elementwise deviation = " + fmt(worst);
    return c;
}

CheckResult check_unitarity() {
    CheckResult c{"unitarity", true, ""};
    ProtocolRun run;
    run.params = tuned_params(4);
    run.marked = 2;
    run.iterations = 1;
    const FidelityTrace trace = run_protocol(run);
    double worst = 0.0;
    for (double nrm : trace.norm) worst = std::max(worst, std::abs(nrm - 1.0));
    c.pass = worst < 1e-8;
    c.detail = "max |norm - 1| = " + fmt(worst);
    return c;
}

CheckResult check_bloch_orthonormality() {
    CheckResult c{"bloch_orthonormality", true, ""};
    double worst = 0.0;
    for (Boundary b : {Boundary::Periodic, Boundary::Open}) {
        const BlochModes modes = bloch_modes(8, 0.7, b);
        const Eigen::MatrixXcd gram = modes.profiles.adjoint() * modes.profiles;
        worst = std::max(
            worst, (gram - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff());
    }
    c.pass = worst < 1e-12;
    c.detail = "max |U^dag U - 1| = " + fmt(worst);
    return c;
}

} // namespace

std::vector<CheckResult> run_validation_suite() {
    return {
        check_closed_form_grover(),     check_householder_reflection(),
        check_w_state_preparation(),    check_propagator_equivalence(),
        check_unitarity(),              check_bloch_orthonormality(),
    };
}

} // namespace cavgrover

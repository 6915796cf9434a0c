#include <benchmark/benchmark.h>

#include <numbers>

#include "cavgrover/dynamics.hpp"
#include "cavgrover/grover.hpp"
#include "cavgrover/robustness.hpp"

using namespace cavgrover;
using std::numbers::pi;

namespace {

ProtocolParams tuned_params(int n) {
    ProtocolParams p;
    p.n = n;
    p.g = 105.0;
    p.delta = 1050.0;
    p.hopping = 1.0;
    p.omega = tuned_omega(p.g, p.delta, p.hopping);
    return p;
}

void BM_EffectiveHamiltonianFill(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EffectiveParams ep = effective_params(tuned_params(n));
    const Eigen::VectorXd couplings = Eigen::VectorXd::Constant(n, ep.g_eff);
    Eigen::MatrixXcd h(n + 1, n + 1);
    for (auto _ : state) {
        fill_effective_hamiltonian(h, ep, couplings);
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK(BM_EffectiveHamiltonianFill)->Arg(8)->Arg(64);

void BM_FullHamiltonianFill(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProtocolParams params = tuned_params(n);
    const Eigen::MatrixXd hop = hopping_matrix(n, params.hopping, params.boundary);
    const Eigen::VectorXd omega = Eigen::VectorXd::Constant(n, params.omega);
    Eigen::MatrixXcd h(3 * n, 3 * n);
    double t = 0.0;
    for (auto _ : state) {
        fill_full_hamiltonian(h, params, omega, t, hop);
        t += 0.125;
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK(BM_FullHamiltonianFill)->Arg(8)->Arg(32);

void BM_AnalyticPropagator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Eigen::VectorXd couplings = Eigen::VectorXd::Constant(n, -5.25);
    const PropagatorAB ab{{-1.0, 0.0}, {0.0, 0.0}};
    for (auto _ : state) {
        Eigen::MatrixXcd u = analytic_propagator(couplings, ab);
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_AnalyticPropagator)->Arg(8)->Arg(64);

void BM_TwoLevelAb(benchmark::State& state) {
    const Pulse pulse = pulse_for_area(PulseShape::Sech, 2.0 * pi, 1.0, 0.0);
    for (auto _ : state) {
        PropagatorAB ab = two_level_ab(pulse);
        benchmark::DoNotOptimize(ab);
    }
}
BENCHMARK(BM_TwoLevelAb);

void BM_InitPulseEvolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const EffectiveParams ep = effective_params(tuned_params(n));
    const double width = ep.protocol_width();
    Pulse pulse = pulse_for_area(PulseShape::Sech, pi, width, 10.0 * width);

    EffectiveModel model;
    model.ep = ep;
    model.n = n;
    model.drive = {pulse};

    for (auto _ : state) {
        RegisterState out =
            evolve(model.provider(), photon_state(n), 0.0, pulse.support_end());
        benchmark::DoNotOptimize(out.amplitudes.data());
    }
}
BENCHMARK(BM_InitPulseEvolve)->Arg(8)->Arg(32);

void BM_SweepTrial(benchmark::State& state) {
    const ProtocolParams params = tuned_params(8);
    DisorderSpec spec;
    spec.seed = 42;
    int trial = 0;
    for (auto _ : state) {
        auto fidelity = run_trial(params, spec, 0.2, trial++ % 100, 3);
        benchmark::DoNotOptimize(fidelity);
    }
}
BENCHMARK(BM_SweepTrial);

} // namespace

BENCHMARK_MAIN();

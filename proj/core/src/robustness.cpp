#include "cavgrover/robustness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "cavgrover/errors.hpp"

namespace cavgrover {

namespace {

// Deterministic, implementation-independent generator (splitmix64).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Box-Muller; one draw per call, discarding the pair partner keeps the
    // draw count per epsilon fixed.
    double standard_normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }
};

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(trial + 1)));
    return mixer.next();
}

Eigen::VectorXd draw_epsilons(SplitMix64& rng, const DisorderSpec& spec, int n) {
    Eigen::VectorXd eps(n);
    if (spec.distribution == DisorderDistribution::Uniform) {
        const double half_width = 2.0 * spec.relative_sigma; // E|eps| = half/2
        for (int i = 0; i < n; ++i) eps(i) = (2.0 * rng.uniform01() - 1.0) * half_width;
    } else {
        const double sigma = spec.relative_sigma * std::sqrt(std::numbers::pi / 2.0);
        for (int i = 0; i < n; ++i) eps(i) = sigma * rng.standard_normal();
    }
    return eps;
}

bool has_target(const DisorderSpec& spec, DisorderTarget t) {
    return std::find(spec.targets.begin(), spec.targets.end(), t) != spec.targets.end();
}

} // namespace

void DisorderSpec::validate() const {
    if (relative_sigma < 0.0) {
        throw InvalidSizeError("disorder relative_sigma must be >= 0");
    }
    if (trials < 1) {
        throw InvalidSizeError("disorder trials must be >= 1");
    }
    if (targets.empty()) {
        throw InvalidSizeError("disorder targets must not be empty");
    }
}

DisorderDraw sample_disorder(const DisorderSpec& spec, const EffectiveParams& ep, int n_qubits,
                             int trial) {
    spec.validate();
    if (n_qubits < 1) {
        throw InvalidSizeError("n_qubits must be >= 1");
    }
    SplitMix64 rng(trial_seed(spec.seed, trial));

    DisorderDraw draw;
    draw.coupling_ratios = Eigen::VectorXd::Ones(n_qubits);
    draw.register_diag = Eigen::VectorXd::Zero(n_qubits);

    if (has_target(spec, DisorderTarget::Coupling)) {
        draw.coupling_ratios += draw_epsilons(rng, spec, n_qubits);
    }
    if (has_target(spec, DisorderTarget::CavityFrequency)) {
        draw.register_diag = std::abs(ep.delta_small) * draw_epsilons(rng, spec, n_qubits);
    }
    return draw;
}

std::optional<double> run_trial(const ProtocolParams& params, const DisorderSpec& spec,
                                double level, int trial, int marked,
                                const IntegratorOptions& opts) {
    DisorderSpec level_spec = spec;
    level_spec.relative_sigma = level;

    const EffectiveParams ep = effective_params(params);
    const DisorderDraw draw = sample_disorder(level_spec, ep, params.n, trial);

    ProtocolRun run;
    run.tier = Tier::Effective;
    run.marked = marked;
    run.params = params;
    run.coupling_ratios = draw.coupling_ratios;
    run.register_diag = draw.register_diag;
    run.integrator = opts;
    try {
        const FidelityTrace trace = run_protocol(run);
        return measure(trace).max_p_marked;
    } catch (const IntegrationError&) {
        return std::nullopt;
    }
}

SweepSummary run_sweep(const ProtocolParams& params, const DisorderSpec& spec,
                       const std::vector<double>& levels, int marked, int threads,
                       const IntegratorOptions& opts) {
    spec.validate();
    if (levels.empty()) {
        throw InvalidSizeError("sweep requires at least one disorder level");
    }
    params.validate();

    SweepSummary summary;
    summary.trials = spec.trials;
    summary.seed = spec.seed;

    const int n_jobs = static_cast<int>(levels.size()) * spec.trials;
    std::vector<std::optional<double>> results(static_cast<size_t>(n_jobs));

    auto worker_body = [&](std::atomic<int>& cursor) {
        for (int job = cursor.fetch_add(1); job < n_jobs; job = cursor.fetch_add(1)) {
            const int level_index = job / spec.trials;
            const int trial = job % spec.trials;
            results[static_cast<size_t>(job)] =
                run_trial(params, spec, levels[static_cast<size_t>(level_index)], trial, marked,
                          opts);
        }
    };

    const int n_workers = std::max(1, std::min(threads, n_jobs));
    if (n_workers == 1) {
        std::atomic<int> cursor{0};
        worker_body(cursor);
    } else {
        std::atomic<int> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back([&] { worker_body(cursor); });
        for (auto& th : pool) th.join();
    }

    for (size_t li = 0; li < levels.size(); ++li) {
        LevelSummary ls;
        ls.level = levels[li];
        double sum = 0.0;
        double lo = 1.0, hi = 0.0;
        int count = 0;
        const size_t base = li * static_cast<size_t>(spec.trials);
        for (int trial = 0; trial < spec.trials; ++trial) {
            const auto& r = results[base + static_cast<size_t>(trial)];
            if (!r) {
                ++ls.n_failed;
                continue;
            }
            sum += *r;
            lo = std::min(lo, *r);
            hi = std::max(hi, *r);
            ++count;
        }
        if (count > 0) {
            ls.min_fidelity = lo;
            ls.max_fidelity = hi;
            if (lo == hi) {
                ls.mean = lo; // identical trials, exactly zero spread
                ls.stddev = 0.0;
            } else {
                ls.mean = sum / count;
                double var = 0.0;
                for (int trial = 0; trial < spec.trials; ++trial) {
                    const auto& r = results[base + static_cast<size_t>(trial)];
                    if (!r) continue;
                    var += (*r - ls.mean) * (*r - ls.mean);
                }
                ls.stddev = std::sqrt(var / count);
            }
        }
        summary.levels.push_back(ls);
    }
    return summary;
}

} // namespace cavgrover

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cavgrover/grover.hpp"
#include "cavgrover/params.hpp"

namespace cavgrover {

enum class DisorderDistribution { Uniform, Gaussian };

enum class DisorderTarget { Coupling, CavityFrequency };

/// Static-disorder ensemble description. `relative_sigma` is the mean
/// absolute deviation of the fractional fluctuations eps_i (uniform draws
/// have half-width 2 sigma, gaussian draws standard deviation
/// sigma sqrt(pi/2), both giving E|eps| = sigma). Draws are deterministic
/// functions of (seed, trial).
struct DisorderSpec {
    double relative_sigma = 0.0;
    DisorderDistribution distribution = DisorderDistribution::Uniform;
    std::vector<DisorderTarget> targets = {DisorderTarget::Coupling};
    int trials = 100;
    std::uint64_t seed = 42;

    void validate() const;
};

/// One sampled disorder realization: per-qubit coupling scale factors
/// g'_i / g' = 1 + eps_i and per-qubit diagonal offsets eps_k |delta|.
struct DisorderDraw {
    Eigen::VectorXd coupling_ratios;
    Eigen::VectorXd register_diag;
};

struct LevelSummary {
    double level = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    double min_fidelity = 0.0;
    double max_fidelity = 0.0;
    int n_failed = 0;
};

struct SweepSummary {
    std::vector<LevelSummary> levels;
    int trials = 0;
    std::uint64_t seed = 0;
};

DisorderDraw sample_disorder(const DisorderSpec& spec, const EffectiveParams& ep, int n_qubits,
                             int trial);

/// Run the effective-tier protocol with one sampled disorder realization and
/// the nominal schedule (pulses calibrated for the unperturbed chi); returns
/// the time-maximum of p_marked, or nullopt if the integration failed.
std::optional<double> run_trial(const ProtocolParams& params, const DisorderSpec& spec,
                                double level, int trial, int marked,
                                const IntegratorOptions& opts = {});

/// Monte Carlo sweep over disorder levels. Trials are independent and may
/// run on several threads; aggregation is ordered by (level, trial) so the
/// summary does not depend on the execution order.
SweepSummary run_sweep(const ProtocolParams& params, const DisorderSpec& spec,
                       const std::vector<double>& levels, int marked, int threads = 1,
                       const IntegratorOptions& opts = {});

} // namespace cavgrover

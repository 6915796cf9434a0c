#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cavgrover/grover.hpp"
#include "cavgrover/params.hpp"
#include "cavgrover/robustness.hpp"

namespace cavgrover {

enum class RunMode { Trace, Sweep, Validate };

/// Fully resolved run configuration. Parsed from JSON with strict key
/// checking; every default is filled in so the echoed configuration is
/// self-describing.
struct RunConfig {
    RunMode mode = RunMode::Trace;

    ProtocolParams params;
    bool omega_auto = false; // omega was "auto": tuned to Delta' = delta

    Tier tier = Tier::Effective;
    int marked = 1;
    int iterations = -1; // -1 = auto
    OracleMode oracle = OracleMode::Ideal;
    bool allow_regime_violation = false;

    double pulse_width = 0.0;         // 0 = auto (pi/|chi|)
    double sample_dt_fraction = 0.05; // sample_dt = fraction * T
    double pulse_window = 10.0;
    EventGrid grid;

    std::vector<double> disorder_levels = {0.0, 0.1, 0.2, 0.3};
    DisorderSpec disorder;

    IntegratorOptions integrator;
    double threshold = 0.5;

    std::string out_dir = "out";
    std::vector<std::string> formats = {"csv", "json", "svg"};
    int threads = 1;
};

/// Parse and validate a JSON run configuration. Unknown keys, type
/// mismatches and constraint violations raise ConfigError naming the key.
RunConfig parse_config(const std::string& text);

/// The fully resolved configuration as pretty JSON (the run-metadata echo).
std::string resolved_config_json(const RunConfig& cfg);

} // namespace cavgrover

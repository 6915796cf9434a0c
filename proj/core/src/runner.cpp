#include "cavgrover/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

#include <json.hpp>

#include "cavgrover/io.hpp"
#include "cavgrover/svg.hpp"
#include "cavgrover/validate.hpp"
#include "cavgrover/version.hpp"

namespace cavgrover {

namespace fs = std::filesystem;

namespace {

bool wants(const RunConfig& cfg, const std::string& format) {
    return std::find(cfg.formats.begin(), cfg.formats.end(), format) != cfg.formats.end();
}

Schedule resolve_schedule(const RunConfig& cfg, int iterations) {
    const EffectiveParams ep = effective_params(cfg.params);
    const double width = cfg.pulse_width > 0.0 ? cfg.pulse_width : ep.protocol_width();
    Schedule s = build_schedule(cfg.params.n, iterations, width, ep, cfg.marked, cfg.grid);
    s.sample_dt = cfg.sample_dt_fraction * width;
    for (Pulse& p : s.pulses) p.window = cfg.pulse_window;
    double end = 0.0;
    for (const Pulse& p : s.pulses) end = std::max(end, p.support_end());
    s.horizon = end + 5.0 * width;
    return s;
}

void write_meta(const RunConfig& cfg, const fs::path& dir, double wall_seconds,
                const nlohmann::ordered_json& extra) {
    nlohmann::ordered_json meta;
    meta["tool"] = "cavgrover";
    meta["version"] = CAVGROVER_VERSION;
    meta["versions"] = {{"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                      std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                      std::to_string(EIGEN_MINOR_VERSION)},
                        {"compiler", __VERSION__}};
    meta["config"] = nlohmann::ordered_json::parse(resolved_config_json(cfg));
    meta["seed"] = cfg.disorder.seed;
    meta["wall_time_s"] = wall_seconds;
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        meta[it.key()] = it.value();
    }
    write_text_file(dir / "run_meta.json", meta.dump(2) + "\n");
}

int run_trace(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();

    ProtocolRun run;
    run.tier = cfg.tier;
    run.marked = cfg.marked;
    run.iterations = cfg.iterations;
    run.oracle = cfg.oracle;
    run.params = cfg.params;
    run.allow_regime_violation = cfg.allow_regime_violation;
    run.integrator = cfg.integrator;

    Schedule schedule;
    if (cfg.tier != Tier::Ideal) {
        const int iterations =
            cfg.iterations < 0 ? optimal_iterations(cfg.params.n) : cfg.iterations;
        schedule = resolve_schedule(cfg, iterations);
        run.schedule = schedule;
    }

    const FidelityTrace trace = run_protocol(run);
    const MeasureSummary summary = measure(trace, cfg.threshold);

    if (wants(cfg, "csv")) {
        write_text_file(dir / "trace.csv", trace_csv(trace));
    }
    if (wants(cfg, "json")) {
        write_text_file(dir / "events.json", events_json(trace));
    }
    if (wants(cfg, "svg")) {
        SvgSeries marked_series, photon_series;
        const double width = trace.pulse_width > 0.0 ? trace.pulse_width : 1.0;
        for (size_t i = 0; i < trace.size(); ++i) {
            marked_series.x.push_back(trace.times[i] / width);
            marked_series.y.push_back(trace.p_marked[i]);
            photon_series.x.push_back(trace.times[i] / width);
            photon_series.y.push_back(trace.p_photon[i]);
        }
        marked_series.name = "p_marked";
        photon_series.name = "p_photon";
        photon_series.color = "#d62728";
        std::vector<SvgMarker> markers;
        for (const TraceEvent& e : trace.events) {
            markers.push_back({e.time / width, e.label});
        }
        write_text_file(dir / "plot.svg",
                        svg_line_plot({marked_series, photon_series}, "protocol trace", "t / T",
                                      "population", markers));
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json extra;
    extra["summary"] = {{"max_p_marked", summary.max_p_marked},
                        {"time_of_max", summary.time_of_max},
                        {"final_p_marked", summary.final_p_marked},
                        {"success", summary.success}};
    extra["basis_labels"] = build_register_basis(cfg.params.n).labels;
    if (cfg.tier != Tier::Ideal) {
        const EffectiveParams ep = effective_params(cfg.params);
        extra["effective_params"] = {{"g_eff", ep.g_eff},
                                     {"delta_prime", ep.delta_prime},
                                     {"delta", ep.delta_small},
                                     {"chi", ep.chi},
                                     {"resonance_mismatch", ep.resonance_mismatch()},
                                     {"pulse_width", schedule.pulse_width}};
    }
    write_meta(cfg, dir, wall, extra);

    log << "trace: max p_marked = " << format_double(summary.max_p_marked) << " at t = "
        << format_double(summary.time_of_max) << ", final = "
        << format_double(summary.final_p_marked) << (summary.success ? " (success)" : "")
        << "\n";
    return 0;
}

int run_sweep_mode(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();

    const SweepSummary summary = run_sweep(cfg.params, cfg.disorder, cfg.disorder_levels,
                                           cfg.marked, cfg.threads, cfg.integrator);

    if (wants(cfg, "csv")) {
        write_text_file(dir / "sweep.csv", sweep_csv(summary));
    }
    if (wants(cfg, "json")) {
        write_text_file(dir / "sweep.json", sweep_json(summary));
    }
    if (wants(cfg, "svg")) {
        SvgSeries mean_series;
        mean_series.name = "mean max fidelity";
        for (const LevelSummary& ls : summary.levels) {
            mean_series.x.push_back(ls.level);
            mean_series.y.push_back(ls.mean);
            mean_series.yerr.push_back(ls.stddev);
        }
        write_text_file(dir / "plot.svg",
                        svg_line_plot({mean_series}, "disorder sweep",
                                      "relative coupling deviation", "max marked fidelity"));
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json extra;
    extra["sweep"] = nlohmann::ordered_json::parse(sweep_json(summary));
    write_meta(cfg, dir, wall, extra);

    for (const LevelSummary& ls : summary.levels) {
        log << "sweep: level " << format_double(ls.level) << " mean "
            << format_double(ls.mean) << " std " << format_double(ls.stddev) << " ["
            << format_double(ls.min_fidelity) << ", " << format_double(ls.max_fidelity) << "]";
        if (ls.n_failed > 0) log << " failed " << ls.n_failed;
        log << "\n";
    }
    return 0;
}

int run_validate(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> checks = run_validation_suite();
    bool all_pass = true;
    for (const CheckResult& c : checks) {
        log << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        all_pass = all_pass && c.pass;
    }
    if (wants(cfg, "json")) {
        write_text_file(dir / "validate.json", validation_json(checks));
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::ordered_json extra;
    extra["validation_passed"] = all_pass;
    write_meta(cfg, dir, wall, extra);
    return all_pass ? 0 : 1;
}

} // namespace

int run_config(const RunConfig& cfg, std::ostream& log) {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    switch (cfg.mode) {
        case RunMode::Trace: return run_trace(cfg, dir, log);
        case RunMode::Sweep: return run_sweep_mode(cfg, dir, log);
        case RunMode::Validate: return run_validate(cfg, dir, log);
    }
    return 2;
}

} // namespace cavgrover

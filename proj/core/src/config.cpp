#include "cavgrover/config.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cavgrover/errors.hpp"

namespace cavgrover {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::string& scope,
                        const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key())) {
            throw ConfigError("unknown key '" + (scope.empty() ? it.key() : scope + "." + it.key()) +
                              "'");
        }
    }
}

double get_number(const json& obj, const std::string& scope, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError("key '" + scope + key + "' must be a number");
    }
    return v.get<double>();
}

int get_integer(const json& obj, const std::string& scope, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError("key '" + scope + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string get_string(const json& obj, const std::string& scope, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) {
        throw ConfigError("key '" + scope + key + "' must be a string");
    }
    return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& scope, const std::string& key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
        throw ConfigError("key '" + scope + key + "' must be a boolean");
    }
    return v.get<bool>();
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("configuration root must be a JSON object");
    }
    require_known_keys(root, "",
                       {"mode", "params", "tier", "marked", "iterations", "oracle",
                        "allow_regime_violation", "schedule", "disorder", "integrator",
                        "threshold", "output", "threads"});

    RunConfig cfg;

    const std::string mode = get_string(root, "", "mode", "trace");
    if (mode == "trace") {
        cfg.mode = RunMode::Trace;
    } else if (mode == "sweep") {
        cfg.mode = RunMode::Sweep;
    } else if (mode == "validate") {
        cfg.mode = RunMode::Validate;
    } else {
        throw ConfigError("key 'mode' must be one of trace, sweep, validate (got '" + mode + "')");
    }

    if (root.contains("params")) {
        const json& p = root.at("params");
        if (!p.is_object()) throw ConfigError("key 'params' must be an object");
        require_known_keys(p, "params",
                           {"n", "g", "omega", "delta", "j", "omega_c", "boundary", "kappa"});
        cfg.params.n = get_integer(p, "params.", "n", cfg.params.n);
        if (cfg.params.n < 1) {
            throw ConfigError("key 'params.n' must be >= 1 (got " +
                              std::to_string(cfg.params.n) + ")");
        }
        cfg.params.g = get_number(p, "params.", "g", cfg.params.g);
        cfg.params.delta = get_number(p, "params.", "delta", cfg.params.delta);
        cfg.params.hopping = get_number(p, "params.", "j", cfg.params.hopping);
        cfg.params.omega_c = get_number(p, "params.", "omega_c", cfg.params.omega_c);
        cfg.params.kappa = get_number(p, "params.", "kappa", cfg.params.kappa);
        if (cfg.params.kappa < 0.0) {
            throw ConfigError("key 'params.kappa' must be >= 0");
        }

        if (p.contains("omega") && p.at("omega").is_string()) {
            if (p.at("omega").get<std::string>() != "auto") {
                throw ConfigError("key 'params.omega' must be a number or \"auto\"");
            }
            cfg.omega_auto = true;
        } else {
            cfg.params.omega = get_number(p, "params.", "omega", cfg.params.omega);
        }

        const std::string boundary = get_string(p, "params.", "boundary", "periodic");
        if (boundary == "periodic") {
            cfg.params.boundary = Boundary::Periodic;
        } else if (boundary == "open") {
            cfg.params.boundary = Boundary::Open;
        } else {
            throw ConfigError("key 'params.boundary' must be 'periodic' or 'open'");
        }
    }

    if (cfg.omega_auto) {
        try {
            cfg.params.omega = tuned_omega(cfg.params.g, cfg.params.delta, cfg.params.hopping);
        } catch (const SingularParameterError& e) {
            throw ConfigError(std::string("key 'params.omega': auto tuning failed: ") + e.what());
        }
    }
    if (cfg.mode != RunMode::Validate) {
        try {
            cfg.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(std::string("key 'params': ") + e.what());
        }
    }

    const std::string tier = get_string(root, "", "tier", "effective");
    if (tier == "ideal") {
        cfg.tier = Tier::Ideal;
    } else if (tier == "effective") {
        cfg.tier = Tier::Effective;
    } else if (tier == "full") {
        cfg.tier = Tier::Full;
    } else {
        throw ConfigError("key 'tier' must be one of ideal, effective, full (got '" + tier + "')");
    }

    cfg.marked = get_integer(root, "", "marked", cfg.marked);
    if (cfg.marked < 1 || cfg.marked > cfg.params.n) {
        throw ConfigError("key 'marked' must lie in [1, params.n]");
    }

    if (root.contains("iterations")) {
        const json& it = root.at("iterations");
        if (it.is_string()) {
            if (it.get<std::string>() != "auto") {
                throw ConfigError("key 'iterations' must be an integer or \"auto\"");
            }
            cfg.iterations = -1;
        } else if (it.is_number_integer()) {
            cfg.iterations = it.get<int>();
            if (cfg.iterations < 0) {
                throw ConfigError("key 'iterations' must be >= 0");
            }
        } else {
            throw ConfigError("key 'iterations' must be an integer or \"auto\"");
        }
    }

    const std::string oracle = get_string(root, "", "oracle", "ideal");
    if (oracle == "ideal") {
        cfg.oracle = OracleMode::Ideal;
    } else if (oracle == "pulsed") {
        cfg.oracle = OracleMode::Pulsed;
    } else {
        throw ConfigError("key 'oracle' must be 'ideal' or 'pulsed'");
    }

    cfg.allow_regime_violation = get_bool(root, "", "allow_regime_violation", false);

    if (root.contains("schedule")) {
        const json& s = root.at("schedule");
        if (!s.is_object()) throw ConfigError("key 'schedule' must be an object");
        require_known_keys(s, "schedule", {"pulse_width", "sample_dt_fraction", "window", "grid"});
        if (s.contains("pulse_width")) {
            const json& w = s.at("pulse_width");
            if (w.is_string()) {
                if (w.get<std::string>() != "auto") {
                    throw ConfigError("key 'schedule.pulse_width' must be a number or \"auto\"");
                }
                cfg.pulse_width = 0.0;
            } else if (w.is_number()) {
                cfg.pulse_width = w.get<double>();
                if (cfg.pulse_width <= 0.0) {
                    throw ConfigError("key 'schedule.pulse_width' must be > 0");
                }
            } else {
                throw ConfigError("key 'schedule.pulse_width' must be a number or \"auto\"");
            }
        }
        cfg.sample_dt_fraction =
            get_number(s, "schedule.", "sample_dt_fraction", cfg.sample_dt_fraction);
        if (cfg.sample_dt_fraction <= 0.0 || cfg.sample_dt_fraction > 1.0) {
            throw ConfigError("key 'schedule.sample_dt_fraction' must lie in (0, 1]");
        }
        cfg.pulse_window = get_number(s, "schedule.", "window", cfg.pulse_window);
        if (cfg.pulse_window < 3.0) {
            throw ConfigError("key 'schedule.window' must be >= 3 (sech truncation)");
        }
        if (s.contains("grid")) {
            const json& g = s.at("grid");
            if (!g.is_object()) throw ConfigError("key 'schedule.grid' must be an object");
            require_known_keys(g, "schedule.grid", {"init", "oracle", "reflection", "period"});
            cfg.grid.init = get_number(g, "schedule.grid.", "init", cfg.grid.init);
            cfg.grid.oracle = get_number(g, "schedule.grid.", "oracle", cfg.grid.oracle);
            cfg.grid.reflection =
                get_number(g, "schedule.grid.", "reflection", cfg.grid.reflection);
            cfg.grid.period = get_number(g, "schedule.grid.", "period", cfg.grid.period);
            if (cfg.grid.period <= 0.0 || cfg.grid.oracle >= cfg.grid.reflection) {
                throw ConfigError(
                    "key 'schedule.grid': period must be > 0 and oracle precede reflection");
            }
        }
    }

    if (root.contains("disorder")) {
        const json& d = root.at("disorder");
        if (!d.is_object()) throw ConfigError("key 'disorder' must be an object");
        require_known_keys(d, "disorder",
                           {"levels", "relative_sigma", "distribution", "targets", "trials",
                            "seed"});
        if (d.contains("levels")) {
            const json& levels = d.at("levels");
            if (!levels.is_array() || levels.empty()) {
                throw ConfigError("key 'disorder.levels' must be a non-empty array of numbers");
            }
            cfg.disorder_levels.clear();
            for (const json& v : levels) {
                if (!v.is_number()) {
                    throw ConfigError("key 'disorder.levels' must contain numbers");
                }
                const double level = v.get<double>();
                if (level < 0.0) {
                    throw ConfigError("key 'disorder.levels' entries must be >= 0");
                }
                cfg.disorder_levels.push_back(level);
            }
        }
        cfg.disorder.relative_sigma =
            get_number(d, "disorder.", "relative_sigma", cfg.disorder.relative_sigma);
        if (cfg.disorder.relative_sigma < 0.0) {
            throw ConfigError("key 'disorder.relative_sigma' must be >= 0");
        }
        const std::string dist = get_string(d, "disorder.", "distribution", "uniform");
        if (dist == "uniform") {
            cfg.disorder.distribution = DisorderDistribution::Uniform;
        } else if (dist == "gaussian") {
            cfg.disorder.distribution = DisorderDistribution::Gaussian;
        } else {
            throw ConfigError("key 'disorder.distribution' must be 'uniform' or 'gaussian'");
        }
        if (d.contains("targets")) {
            const json& targets = d.at("targets");
            if (!targets.is_array() || targets.empty()) {
                throw ConfigError("key 'disorder.targets' must be a non-empty array");
            }
            cfg.disorder.targets.clear();
            for (const json& v : targets) {
                const std::string t = v.is_string() ? v.get<std::string>() : "";
                if (t == "coupling") {
                    cfg.disorder.targets.push_back(DisorderTarget::Coupling);
                } else if (t == "cavity_frequency") {
                    cfg.disorder.targets.push_back(DisorderTarget::CavityFrequency);
                } else {
                    throw ConfigError(
                        "key 'disorder.targets' entries must be 'coupling' or 'cavity_frequency'");
                }
            }
        }
        cfg.disorder.trials = get_integer(d, "disorder.", "trials", cfg.disorder.trials);
        if (cfg.disorder.trials < 1) {
            throw ConfigError("key 'disorder.trials' must be >= 1");
        }
        if (d.contains("seed")) {
            const json& seed = d.at("seed");
            if (!seed.is_number_integer()) {
                throw ConfigError("key 'disorder.seed' must be an integer");
            }
            cfg.disorder.seed = seed.get<std::uint64_t>();
        }
    }

    if (root.contains("integrator")) {
        const json& i = root.at("integrator");
        if (!i.is_object()) throw ConfigError("key 'integrator' must be an object");
        require_known_keys(i, "integrator", {"rel_tol", "abs_tol"});
        cfg.integrator.rel_tol = get_number(i, "integrator.", "rel_tol", cfg.integrator.rel_tol);
        cfg.integrator.abs_tol = get_number(i, "integrator.", "abs_tol", cfg.integrator.abs_tol);
        if (cfg.integrator.rel_tol <= 0.0 || cfg.integrator.abs_tol <= 0.0) {
            throw ConfigError("keys 'integrator.rel_tol'/'abs_tol' must be > 0");
        }
    }

    cfg.threshold = get_number(root, "", "threshold", cfg.threshold);
    if (cfg.threshold < 0.0 || cfg.threshold > 1.0) {
        throw ConfigError("key 'threshold' must lie in [0, 1]");
    }

    if (root.contains("output")) {
        const json& o = root.at("output");
        if (!o.is_object()) throw ConfigError("key 'output' must be an object");
        require_known_keys(o, "output", {"directory", "formats"});
        cfg.out_dir = get_string(o, "output.", "directory", cfg.out_dir);
        if (o.contains("formats")) {
            const json& formats = o.at("formats");
            if (!formats.is_array()) {
                throw ConfigError("key 'output.formats' must be an array");
            }
            cfg.formats.clear();
            for (const json& v : formats) {
                const std::string f = v.is_string() ? v.get<std::string>() : "";
                if (f != "csv" && f != "json" && f != "svg") {
                    throw ConfigError("key 'output.formats' entries must be csv, json or svg");
                }
                cfg.formats.push_back(f);
            }
        }
    }

    cfg.threads = get_integer(root, "", "threads", cfg.threads);
    if (cfg.threads < 1) {
        throw ConfigError("key 'threads' must be >= 1");
    }

    if (cfg.mode == RunMode::Sweep) {
        if (cfg.tier != Tier::Effective) {
            throw ConfigError("key 'tier': sweep mode runs the effective tier");
        }
        if (cfg.oracle != OracleMode::Ideal) {
            throw ConfigError("key 'oracle': sweep mode uses the ideal oracle");
        }
    }

    return cfg;
}

std::string resolved_config_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["mode"] = cfg.mode == RunMode::Trace    ? "trace"
                : cfg.mode == RunMode::Sweep  ? "sweep"
                                              : "validate";
    j["params"] = {{"n", cfg.params.n},
                   {"g", cfg.params.g},
                   {"omega", cfg.params.omega},
                   {"omega_auto", cfg.omega_auto},
                   {"delta", cfg.params.delta},
                   {"j", cfg.params.hopping},
                   {"omega_c", cfg.params.omega_c},
                   {"boundary", cfg.params.boundary == Boundary::Periodic ? "periodic" : "open"},
                   {"kappa", cfg.params.kappa}};
    j["tier"] = cfg.tier == Tier::Ideal       ? "ideal"
                : cfg.tier == Tier::Effective ? "effective"
                                              : "full";
    j["marked"] = cfg.marked;
    j["iterations"] =
        cfg.iterations < 0 ? nlohmann::ordered_json("auto") : nlohmann::ordered_json(cfg.iterations);
    j["iterations_resolved"] =
        cfg.iterations < 0 ? optimal_iterations(cfg.params.n) : cfg.iterations;
    j["oracle"] = cfg.oracle == OracleMode::Ideal ? "ideal" : "pulsed";
    j["allow_regime_violation"] = cfg.allow_regime_violation;
    j["schedule"] = {{"pulse_width", cfg.pulse_width},
                     {"pulse_width_auto", cfg.pulse_width <= 0.0},
                     {"sample_dt_fraction", cfg.sample_dt_fraction},
                     {"window", cfg.pulse_window},
                     {"grid",
                      {{"init", cfg.grid.init},
                       {"oracle", cfg.grid.oracle},
                       {"reflection", cfg.grid.reflection},
                       {"period", cfg.grid.period}}}};
    j["disorder"] = {{"levels", cfg.disorder_levels},
                     {"relative_sigma", cfg.disorder.relative_sigma},
                     {"distribution", cfg.disorder.distribution == DisorderDistribution::Uniform
                                          ? "uniform"
                                          : "gaussian"},
                     {"trials", cfg.disorder.trials},
                     {"seed", cfg.disorder.seed}};
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (DisorderTarget t : cfg.disorder.targets) {
        targets.push_back(t == DisorderTarget::Coupling ? "coupling" : "cavity_frequency");
    }
    j["disorder"]["targets"] = targets;
    j["integrator"] = {{"rel_tol", cfg.integrator.rel_tol}, {"abs_tol", cfg.integrator.abs_tol}};
    j["threshold"] = cfg.threshold;
    j["output"] = {{"directory", cfg.out_dir}, {"formats", cfg.formats}};
    j["threads"] = cfg.threads;
    return j.dump(2) + "\n";
}

} // namespace cavgrover

#include <doctest.h>

#include <json.hpp>

#include "cavgrover/config.hpp"
#include "cavgrover/errors.hpp"

using namespace cavgrover;

TEST_CASE("minimal trace config fills defaults") {
    const RunConfig cfg = parse_config(R"({
        "mode": "trace",
        "params": {"n": 8, "g": 105.0, "omega": 105.0, "delta": 1050.0, "j": 1.0},
        "tier": "ideal",
        "marked": 3
    })");
    CHECK(cfg.mode == RunMode::Trace);
    CHECK(cfg.tier == Tier::Ideal);
    CHECK(cfg.marked == 3);
    CHECK(cfg.iterations == -1); // auto
    CHECK(cfg.oracle == OracleMode::Ideal);
    CHECK(cfg.sample_dt_fraction == doctest::Approx(0.05));
    CHECK(cfg.out_dir == "out");
    CHECK(cfg.threads == 1);

    const auto j = nlohmann::json::parse(resolved_config_json(cfg));
    CHECK(j.at("iterations") == "auto");
    CHECK(j.at("iterations_resolved") == 2); // optimal_iterations(8)
    CHECK(j.at("params").at("n") == 8);
}

TEST_CASE("omega auto resolves to the tuned drive") {
    const RunConfig cfg = parse_config(R"({
        "mode": "trace",
        "params": {"n": 4, "g": 105.0, "omega": "auto", "delta": 1050.0, "j": 1.0}
    })");
    CHECK(cfg.omega_auto);
    const EffectiveParams ep = effective_params(cfg.params);
    CHECK(ep.resonance_mismatch() ==
          doctest::Approx(0.0).scale(std::abs(ep.delta_small)));
}

TEST_CASE("size and singularity constraints are rejected by key") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":0}})"),
        doctest::Contains("params.n"), ConfigError);

    // delta = 2 j hits the delta pole
    CHECK_THROWS_WITH_AS(
        parse_config(
            R"({"mode":"trace","params":{"n":4,"g":1.0,"omega":1.0,"delta":2.0,"j":1.0}})"),
        doctest::Contains("params"), ConfigError);

    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "marked": 9})"),
        doctest::Contains("marked"), ConfigError);
}

TEST_CASE("unknown keys and type mismatches are named") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"mode":"trace","paramz":{}})"),
                         doctest::Contains("paramz"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":4,"delta":5.0,"gg":1.0}})"),
        doctest::Contains("params.gg"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"mode":"trace","marked":"three"})"),
                         doctest::Contains("marked"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"mode":"warp"})"), doctest::Contains("mode"),
                         ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("sweep settings parse into the disorder spec") {
    const RunConfig cfg = parse_config(R"({
        "mode": "sweep",
        "params": {"n": 8, "g": 105.0, "omega": "auto", "delta": 1050.0, "j": 1.0},
        "marked": 3,
        "disorder": {
            "levels": [0.0, 0.1, 0.2, 0.3],
            "distribution": "gaussian",
            "targets": ["coupling", "cavity_frequency"],
            "trials": 25,
            "seed": 1234
        },
        "threads": 4
    })");
    CHECK(cfg.mode == RunMode::Sweep);
    CHECK(cfg.disorder_levels == std::vector<double>{0.0, 0.1, 0.2, 0.3});
    CHECK(cfg.disorder.distribution == DisorderDistribution::Gaussian);
    CHECK(cfg.disorder.targets.size() == 2);
    CHECK(cfg.disorder.trials == 25);
    CHECK(cfg.disorder.seed == 1234);
    CHECK(cfg.threads == 4);

    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"sweep","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "disorder":{"levels":[]}})"),
        doctest::Contains("disorder.levels"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"sweep","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "disorder":{"distribution":"poisson"}})"),
        doctest::Contains("disorder.distribution"), ConfigError);

    // sweep trials run the effective tier with the ideal oracle
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"sweep","tier":"full",
                         "params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0}})"),
        doctest::Contains("tier"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"sweep","oracle":"pulsed",
                         "params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0}})"),
        doctest::Contains("oracle"), ConfigError);
}

TEST_CASE("schedule and integrator overrides") {
    const RunConfig cfg = parse_config(R"({
        "mode": "trace",
        "params": {"n": 4, "g": 105.0, "omega": "auto", "delta": 1050.0, "j": 1.0},
        "schedule": {"pulse_width": 0.5, "sample_dt_fraction": 0.1, "window": 8.0},
        "integrator": {"rel_tol": 1e-9, "abs_tol": 1e-13},
        "threshold": 0.7,
        "output": {"directory": "results", "formats": ["csv"]}
    })");
    CHECK(cfg.pulse_width == doctest::Approx(0.5));
    CHECK(cfg.sample_dt_fraction == doctest::Approx(0.1));
    CHECK(cfg.pulse_window == doctest::Approx(8.0));
    CHECK(cfg.integrator.rel_tol == doctest::Approx(1e-9));
    CHECK(cfg.threshold == doctest::Approx(0.7));
    CHECK(cfg.out_dir == "results");
    CHECK(cfg.formats == std::vector<std::string>{"csv"});

    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "schedule":{"pulse_width":-1.0}})"),
        doctest::Contains("pulse_width"), ConfigError);

    const RunConfig grid_cfg = parse_config(R"({
        "mode": "trace",
        "params": {"n": 4, "g": 105.0, "omega": "auto", "delta": 1050.0, "j": 1.0},
        "schedule": {"grid": {"oracle": 20.0, "reflection": 50.0, "period": 70.0}}
    })");
    CHECK(grid_cfg.grid.init == doctest::Approx(10.0)); // default kept
    CHECK(grid_cfg.grid.oracle == doctest::Approx(20.0));
    CHECK(grid_cfg.grid.period == doctest::Approx(70.0));
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "schedule":{"grid":{"period":-2.0}}})"),
        doctest::Contains("schedule.grid"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"mode":"trace","params":{"n":4,"g":1.0,"omega":1.0,"delta":10.0},
                         "output":{"formats":["pdf"]}})"),
        doctest::Contains("output.formats"), ConfigError);
}

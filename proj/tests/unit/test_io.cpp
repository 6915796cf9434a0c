#include <doctest.h>

#include <json.hpp>

#include "cavgrover/io.hpp"
#include "cavgrover/svg.hpp"

using namespace cavgrover;

namespace {

FidelityTrace sample_trace() {
    FidelityTrace t;
    t.times = {0.0, 0.5, 1.0};
    t.p_marked = {0.0, 0.25, 1.0};
    t.p_photon = {1.0, 0.5, 0.0};
    t.norm = {1.0, 1.0, 1.0};
    t.events = {{0.0, "init"}, {0.5, "oracle1"}};
    t.pulse_width = 0.5;
    return t;
}

} // namespace

TEST_CASE("trace csv layout") {
    const std::string csv = trace_csv(sample_trace());
    CHECK(csv.rfind("t,t_over_T,p_marked,p_photon,norm\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("0.5,1,0.25,0.5,1\n") != std::string::npos);
}

TEST_CASE("csv output is reproducible") {
    const std::string a = trace_csv(sample_trace());
    const std::string b = trace_csv(sample_trace());
    CHECK(a == b);
}

TEST_CASE("events json round trips") {
    const auto parsed = nlohmann::json::parse(events_json(sample_trace()));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].at("label") == "init");
    CHECK(parsed[1].at("t") == doctest::Approx(0.5));
    CHECK(parsed[1].at("t_over_T") == doctest::Approx(1.0));
}

TEST_CASE("sweep csv and json layout") {
    SweepSummary s;
    s.trials = 10;
    s.seed = 42;
    s.levels.push_back({0.0, 0.945, 0.0, 0.945, 0.945, 0});
    s.levels.push_back({0.3, 0.81, 0.07, 0.62, 0.93, 1});

    const std::string csv = sweep_csv(s);
    CHECK(csv.rfind("level,mean,std,min,max,n_failed\n", 0) == 0);
    CHECK(csv.find("0.3,0.81,0.07,0.62,0.93,1\n") != std::string::npos);

    const auto parsed = nlohmann::json::parse(sweep_json(s));
    CHECK(parsed.at("trials") == 10);
    CHECK(parsed.at("levels").size() == 2);
    CHECK(parsed.at("levels")[1].at("n_failed") == 1);
}

TEST_CASE("error json is machine readable") {
    const auto parsed = nlohmann::json::parse(error_json("config", "unknown key 'foo'"));
    CHECK(parsed.at("error").at("type") == "config");
    CHECK(parsed.at("error").at("message") == "unknown key 'foo'");
}

TEST_CASE("svg plot renders series and markers") {
    SvgSeries series;
    series.x = {0.0, 1.0, 2.0};
    series.y = {0.0, 0.5, 1.0};
    series.name = "p_marked";
    const std::string svg =
        svg_line_plot({series}, "trace", "t / T", "population", {{1.0, "oracle"}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("oracle") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    // error bars add vertical strokes
    SvgSeries with_err = series;
    with_err.yerr = {0.1, 0.1, 0.1};
    const std::string svg_err = svg_line_plot({with_err}, "sweep", "level", "fidelity");
    CHECK(svg_err.size() > svg.size());
}

TEST_CASE("format_double uses plain decimal notation") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(-3.5e-7) == "-3.5e-07");
}

#include "cavgrover/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cavgrover/errors.hpp"

namespace cavgrover {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string trace_csv(const FidelityTrace& trace) {
    std::string out = "t,t_over_T,p_marked,p_photon,norm\n";
    const double width = trace.pulse_width > 0.0 ? trace.pulse_width : 1.0;
    for (size_t i = 0; i < trace.size(); ++i) {
        out += format_double(trace.times[i]);
        out += ',';
        out += format_double(trace.times[i] / width);
        out += ',';
        out += format_double(trace.p_marked[i]);
        out += ',';
        out += format_double(trace.p_photon[i]);
        out += ',';
        out += format_double(trace.norm[i]);
        out += '\n';
    }
    return out;
}

std::string events_json(const FidelityTrace& trace) {
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    const double width = trace.pulse_width > 0.0 ? trace.pulse_width : 1.0;
    for (const TraceEvent& e : trace.events) {
        events.push_back({{"t", e.time}, {"t_over_T", e.time / width}, {"label", e.label}});
    }
    return events.dump(2) + "\n";
}

std::string sweep_csv(const SweepSummary& summary) {
    std::string out = "level,mean,std,min,max,n_failed\n";
    for (const LevelSummary& ls : summary.levels) {
        out += format_double(ls.level);
        out += ',';
        out += format_double(ls.mean);
        out += ',';
        out += format_double(ls.stddev);
        out += ',';
        out += format_double(ls.min_fidelity);
        out += ',';
        out += format_double(ls.max_fidelity);
        out += ',';
        out += std::to_string(ls.n_failed);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const SweepSummary& summary) {
    nlohmann::ordered_json j;
    j["trials"] = summary.trials;
    j["seed"] = summary.seed;
    j["levels"] = nlohmann::ordered_json::array();
    for (const LevelSummary& ls : summary.levels) {
        j["levels"].push_back({{"level", ls.level},
                               {"mean", ls.mean},
                               {"std", ls.stddev},
                               {"min", ls.min_fidelity},
                               {"max", ls.max_fidelity},
                               {"n_failed", ls.n_failed}});
    }
    return j.dump(2) + "\n";
}

std::string validation_json(const std::vector<CheckResult>& checks) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
}

std::string error_json(const std::string& type, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = {{"type", type}, {"message", message}};
    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace cavgrover

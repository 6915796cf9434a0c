#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cavgrover/errors.hpp"
#include "cavgrover/io.hpp"
#include "cavgrover/runner.hpp"
#include "cavgrover/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw cavgrover::ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(s);
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover-search simulator for coupled cavity arrays"};
    app.set_version_flag("--version", CAVGROVER_VERSION);

    std::string config_path;
    std::string out_dir, formats;
    long long seed = -1;
    int threads = 0;

    app.add_option("config", config_path, "run configuration (JSON)")->required();
    app.add_option("--out", out_dir, "output directory (overrides config)")
        ->envname("CAVGROVER_OUT");
    app.add_option("--seed", seed, "disorder seed (overrides config)")
        ->envname("CAVGROVER_SEED");
    app.add_option("--threads", threads, "worker threads for sweeps (overrides config)")
        ->envname("CAVGROVER_THREADS");
    app.add_option("--format", formats, "comma-separated output formats: csv,json,svg")
        ->envname("CAVGROVER_FORMAT");

    CLI11_PARSE(app, argc, argv);

    try {
        cavgrover::RunConfig cfg = cavgrover::parse_config(read_file(config_path));
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (seed >= 0) cfg.disorder.seed = static_cast<std::uint64_t>(seed);
        if (threads > 0) cfg.threads = threads;
        if (!formats.empty()) {
            cfg.formats = split_csv(formats);
            for (const std::string& f : cfg.formats) {
                if (f != "csv" && f != "json" && f != "svg") {
                    throw cavgrover::ConfigError("--format entries must be csv, json or svg");
                }
            }
        }
        return cavgrover::run_config(cfg, std::cout);
    } catch (const cavgrover::ConfigError& e) {
        std::cerr << cavgrover::error_json("config", e.what());
        return 2;
    } catch (const cavgrover::IntegrationError& e) {
        std::cerr << cavgrover::error_json("integration", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::cerr << cavgrover::error_json("runtime", e.what());
        return 4;
    }
}

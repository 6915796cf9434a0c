#pragma once

#include <iosfwd>

#include "cavgrover/config.hpp"

namespace cavgrover {

/// Execute a resolved configuration: run the protocol or sweep, write the
/// requested artifacts (CSV/JSON/SVG plus run_meta.json) into cfg.out_dir
/// and log a one-line summary per result. Returns the process exit code
/// (0 on success, 1 when a validate check fails).
int run_config(const RunConfig& cfg, std::ostream& log);

} // namespace cavgrover

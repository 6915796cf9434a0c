#pragma once

#include <filesystem>
#include <string>

#include "cavgrover/grover.hpp"
#include "cavgrover/robustness.hpp"
#include "cavgrover/validate.hpp"

namespace cavgrover {

/// Deterministic numeric formatting for data files: %.12g, C locale dot.
std::string format_double(double v);

/// CSV with header t,t_over_T,p_marked,p_photon,norm; comma separated,
/// LF line endings.
std::string trace_csv(const FidelityTrace& trace);

/// Pulse-center events with absolute and T-scaled times, as a JSON array.
std::string events_json(const FidelityTrace& trace);

/// CSV with header level,mean,std,min,max,n_failed.
std::string sweep_csv(const SweepSummary& summary);

std::string sweep_json(const SweepSummary& summary);

std::string validation_json(const std::vector<CheckResult>& checks);

/// {"error": {"type": ..., "message": ...}} for machine-readable failures.
std::string error_json(const std::string& type, const std::string& message);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace cavgrover

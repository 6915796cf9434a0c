#pragma once

#include <string>
#include <vector>

namespace cavgrover {

/// One plotted series; `yerr`, when non-empty, draws symmetric error bars.
struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> yerr;
    std::string name;
    std::string color = "#1f77b4";
};

struct SvgMarker {
    double x = 0.0;
    std::string label;
};

/// Minimal static line plot (no external tooling, no timestamps). Axis
/// ranges are derived from the data; vertical markers label event times.
std::string svg_line_plot(const std::vector<SvgSeries>& series, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<SvgMarker>& markers = {});

} // namespace cavgrover

#include "cavgrover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace cavgrover {

namespace {

constexpr double kWidth = 720.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 55.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round the raw span to a 1/2/5 tick interval.
double tick_step(double span) {
    if (span <= 0.0) return 1.0;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.5) return 2.0 * mag;
    if (r < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace

std::string svg_line_plot(const std::vector<SvgSeries>& series, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<SvgMarker>& markers) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const SvgSeries& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            const double err = i < s.yerr.size() ? s.yerr[i] : 0.0;
            y_min = std::min(y_min, s.y[i] - err);
            y_max = std::max(y_max, s.y[i] + err);
        }
    }
    if (!std::isfinite(x_min)) {
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" + xml_escape(title) + "</text>\n";

    // frame
    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // ticks
    const double xs = tick_step(x_max - x_min);
    for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-12 * xs; x += xs) {
        svg += "<line x1=\"" + num(px(x)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
               num(px(x)) + "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(x) +
               "</text>\n";
    }
    const double ys = tick_step(y_max - y_min);
    for (double y = std::ceil(y_min / ys) * ys; y <= y_max + 1e-12 * ys; y += ys) {
        svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(y)) + "\" x2=\"" +
               num(kLeft) + "\" y2=\"" + num(py(y)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(y) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(y) +
               "</text>\n";
    }

    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           xml_escape(x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) + ")\">" +
           xml_escape(y_label) + "</text>\n";

    for (const SvgMarker& m : markers) {
        if (m.x < x_min || m.x > x_max) continue;
        svg += "<line x1=\"" + num(px(m.x)) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
               num(px(m.x)) + "\" y2=\"" + num(kTop + plot_h) +
               "\" stroke=\"#bbbbbb\" stroke-dasharray=\"3,3\"/>\n";
        svg += "<text x=\"" + num(px(m.x) + 3) + "\" y=\"" + num(kTop + 12) +
               "\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#666666\">" +
               xml_escape(m.label) + "</text>\n";
    }

    double legend_y = kTop + 14.0;
    for (const SvgSeries& s : series) {
        if (s.x.empty()) continue;
        for (size_t i = 0; i < s.yerr.size() && i < s.x.size(); ++i) {
            if (s.yerr[i] <= 0.0) continue;
            const double cx = px(s.x[i]);
            svg += "<line x1=\"" + num(cx) + "\" y1=\"" + num(py(s.y[i] - s.yerr[i])) +
                   "\" x2=\"" + num(cx) + "\" y2=\"" + num(py(s.y[i] + s.yerr[i])) +
                   "\" stroke=\"" + s.color + "\"/>\n";
            for (double e : {s.y[i] - s.yerr[i], s.y[i] + s.yerr[i]}) {
                svg += "<line x1=\"" + num(cx - 4) + "\" y1=\"" + num(py(e)) + "\" x2=\"" +
                       num(cx + 4) + "\" y2=\"" + num(py(e)) + "\" stroke=\"" + s.color +
                       "\"/>\n";
            }
        }
        std::string points;
        for (size_t i = 0; i < s.x.size(); ++i) {
            points += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
        }
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\"/>\n";
        if (!s.name.empty()) {
            svg += "<line x1=\"" + num(kLeft + plot_w - 130) + "\" y1=\"" + num(legend_y - 4) +
                   "\" x2=\"" + num(kLeft + plot_w - 110) + "\" y2=\"" + num(legend_y - 4) +
                   "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"/>\n";
            svg += "<text x=\"" + num(kLeft + plot_w - 105) + "\" y=\"" + num(legend_y) +
                   "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(s.name) +
                   "</text>\n";
            legend_y += 14.0;
        }
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace cavgrover

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "comcore/grid.hpp"
#include "comcore/path.hpp"

namespace comcore {

namespace detail {

inline std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace detail

// Deterministic SVG rendering of a set of paths: grid lines, blocked cells,
// one polyline per agent through cell centers, a dot at the start and a plus
// at the goal. North is up.
inline std::string emit_svg(const std::vector<TimedPath>& paths,
                            const GridSpec& spec) {
    static const char* kPalette[] = {
        "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    };
    constexpr int kPaletteSize = 10;
    const double l = spec.cell_size_m();
    const double w = spec.cols() * l;
    const double h = spec.rows() * l;
    auto Y = [&](double y_m) { return h - y_m; };  // SVG y grows downward

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           detail::fmt1(w) + " " + detail::fmt1(h) + "\" width=\"560\" height=\"560\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + detail::fmt1(w) + "\" height=\"" +
           detail::fmt1(h) + "\" fill=\"#ffffff\"/>\n";

    for (const Cell& b : spec.blocked()) {
        out += "<rect x=\"" + detail::fmt1(b.x * l) + "\" y=\"" +
               detail::fmt1(Y((b.y + 1) * l)) + "\" width=\"" + detail::fmt1(l) +
               "\" height=\"" + detail::fmt1(l) + "\" fill=\"#555555\"/>\n";
    }
    for (int x = 0; x <= spec.cols(); ++x) {
        out += "<line x1=\"" + detail::fmt1(x * l) + "\" y1=\"0\" x2=\"" +
               detail::fmt1(x * l) + "\" y2=\"" + detail::fmt1(h) +
               "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    }
    for (int y = 0; y <= spec.rows(); ++y) {
        out += "<line x1=\"0\" y1=\"" + detail::fmt1(y * l) + "\" x2=\"" +
               detail::fmt1(w) + "\" y2=\"" + detail::fmt1(y * l) +
               "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    }

    for (const TimedPath& p : paths) {
        const char* color = kPalette[p.agent_id % kPaletteSize];
        if (p.waypoints.empty()) continue;
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.6\" points=\"";
        bool first = true;
        for (const Cell& c : p.waypoints) {
            const auto [cx, cy] = cell_center(spec, c);
            if (!first) out += " ";
            first = false;
            out += detail::fmt1(cx) + "," + detail::fmt1(Y(cy));
        }
        out += "\"/>\n";

        const auto [sx, sy] = cell_center(spec, p.waypoints.front());
        out += "<circle cx=\"" + detail::fmt1(sx) + "\" cy=\"" +
               detail::fmt1(Y(sy)) + "\" r=\"2.2\" fill=\"";
        out += color;
        out += "\"/>\n";

        const auto [gx, gy] = cell_center(spec, p.waypoints.back());
        const double a = 3.0;
        out += "<path d=\"M " + detail::fmt1(gx - a) + " " + detail::fmt1(Y(gy)) +
               " H " + detail::fmt1(gx + a) + " M " + detail::fmt1(gx) + " " +
               detail::fmt1(Y(gy) - a) + " V " + detail::fmt1(Y(gy) + a) +
               "\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.6\" fill=\"none\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace comcore

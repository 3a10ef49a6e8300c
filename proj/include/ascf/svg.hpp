// Minimal deterministic SVG line plots.
#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ascf {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Renders a fixed-size line chart: one polyline per series, linear axes
// with tick labels, axis captions and a legend naming every series. The
// output depends only on the input data. A degenerate (zero-width) data
// range is widened by +-0.05. Returns the number of bytes written.
std::size_t render_svg_plot(std::span<const Series> series,
                            const std::string& x_label,
                            const std::string& y_label, std::ostream& out);

}  // namespace ascf

#include "ascf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ascf/format.hpp"

namespace ascf {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 48.0;
constexpr double kPlotW = kWidth - kMarginLeft - kMarginRight;
constexpr double kPlotH = kHeight - kMarginTop - kMarginBottom;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string px(double value) {
    return format_double(std::round(value * 100.0) / 100.0);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo;
    double hi;
    double span() const { return hi - lo; }
};

}  // namespace

std::size_t render_svg_plot(std::span<const Series> series,
                            const std::string& x_label,
                            const std::string& y_label, std::ostream& out) {
    if (series.empty()) {
        throw std::invalid_argument("plot needs at least one series");
    }
    Range xr{0.0, 0.0}, yr{0.0, 0.0};
    bool first = true;
    for (const Series& s : series) {
        if (s.points.size() < 2) {
            throw std::invalid_argument("series \"" + s.label +
                                        "\" needs at least two points");
        }
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw std::invalid_argument("series \"" + s.label +
                                            "\" has a non-finite point");
            }
            if (first) {
                xr = {x, x};
                yr = {y, y};
                first = false;
            } else {
                xr.lo = std::min(xr.lo, x);
                xr.hi = std::max(xr.hi, x);
                yr.lo = std::min(yr.lo, y);
                yr.hi = std::max(yr.hi, y);
            }
        }
    }
    if (xr.span() == 0.0) {
        xr.lo -= 0.05;
        xr.hi += 0.05;
    }
    if (yr.span() == 0.0) {
        yr.lo -= 0.05;
        yr.hi += 0.05;
    }

    auto map_x = [&xr](double x) {
        return kMarginLeft + (x - xr.lo) / xr.span() * kPlotW;
    };
    auto map_y = [&yr](double y) {
        return kMarginTop + kPlotH - (y - yr.lo) / yr.span() * kPlotH;
    };

    std::string buf;
    buf.reserve(16384);
    buf += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    buf += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
           "height=\"480\" viewBox=\"0 0 720 480\" "
           "font-family=\"sans-serif\" font-size=\"12\">\n";
    buf += "<rect x=\"" + px(kMarginLeft) + "\" y=\"" + px(kMarginTop) +
           "\" width=\"" + px(kPlotW) + "\" height=\"" + px(kPlotH) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // Ticks and numeric labels on both axes.
    for (int i = 0; i <= 4; ++i) {
        const double fx = xr.lo + xr.span() * i / 4.0;
        const double gx = map_x(fx);
        buf += "<line x1=\"" + px(gx) + "\" y1=\"" +
               px(kMarginTop + kPlotH) + "\" x2=\"" + px(gx) + "\" y2=\"" +
               px(kMarginTop + kPlotH + 5.0) + "\" stroke=\"#444444\"/>\n";
        buf += "<text x=\"" + px(gx) + "\" y=\"" +
               px(kMarginTop + kPlotH + 18.0) +
               "\" text-anchor=\"middle\">" + format_double(fx) +
               "</text>\n";

        const double fy = yr.lo + yr.span() * i / 4.0;
        const double gy = map_y(fy);
        buf += "<line x1=\"" + px(kMarginLeft - 5.0) + "\" y1=\"" + px(gy) +
               "\" x2=\"" + px(kMarginLeft) + "\" y2=\"" + px(gy) +
               "\" stroke=\"#444444\"/>\n";
        buf += "<text x=\"" + px(kMarginLeft - 8.0) + "\" y=\"" +
               px(gy + 4.0) + "\" text-anchor=\"end\">" + format_double(fy) +
               "</text>\n";
    }

    buf += "<text x=\"" + px(kMarginLeft + kPlotW / 2.0) + "\" y=\"" +
           px(kHeight - 10.0) + "\" text-anchor=\"middle\">" +
           xml_escape(x_label) + "</text>\n";
    buf += "<text x=\"" + px(kMarginLeft) + "\" y=\"" +
           px(kMarginTop - 8.0) + "\" text-anchor=\"start\">" +
           xml_escape(y_label) + "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        buf += "<polyline fill=\"none\" stroke=\"";
        buf += color;
        buf += "\" stroke-width=\"1.5\" points=\"";
        bool first_pt = true;
        for (const auto& [x, y] : series[i].points) {
            if (!first_pt) buf += ' ';
            buf += px(map_x(x)) + "," + px(map_y(y));
            first_pt = false;
        }
        buf += "\"/>\n";
    }

    // Legend to the right of the plot area, one row per series.
    const double legend_x = kMarginLeft + kPlotW + 12.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        const double row_y = kMarginTop + 12.0 + 20.0 * static_cast<double>(i);
        buf += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(row_y) +
               "\" x2=\"" + px(legend_x + 22.0) + "\" y2=\"" + px(row_y) +
               "\" stroke=\"";
        buf += color;
        buf += "\" stroke-width=\"1.5\"/>\n";
        buf += "<text x=\"" + px(legend_x + 28.0) + "\" y=\"" +
               px(row_y + 4.0) + "\">" + xml_escape(series[i].label) +
               "</text>\n";
    }
    buf += "</svg>\n";

    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("failed to write SVG");
    return buf.size();
}

}  // namespace ascf

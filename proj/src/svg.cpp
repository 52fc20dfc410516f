#include "ebeta/svg.hpp"

#include <cstdio>

namespace ebeta {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_levels_svg(const Beta& beta, int top_level) {
    if (top_level < 0) throw Error("negative level");
    const double margin_x = 20.0;
    const double margin_y = 16.0;
    const double bar_height = 12.0;
    const double level_spacing = 20.0;
    const double x_scale = 600.0 / gamma(beta).to_double();
    const double width = 700.0;
    const double height = margin_y + level_spacing * (top_level + 1) + 8.0;

    const Rat overlap_offset =
        (beta.value() + Rat(1)) / (beta.value() * beta.value());  // f_{0B}(0) = f_{11}(0)

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
           "\">\n";
    for (int level = 0; level <= top_level; ++level) {
        const double y = margin_y + level_spacing * level;
        out += "  <g class=\"level\" data-level=\"" + std::to_string(level) + "\">\n";
        const Rat len = gamma(beta) * beta.value().pow(-static_cast<long>(level));
        const double w = len.to_double() * x_scale;
        int index = 0;
        for (const Rat& offset : level_offsets(beta, level)) {
            const double x = margin_x + offset.to_double() * x_scale;
            const double yy = y + (index % 2 ? 3.0 : 0.0);  // stagger so overlaps stay visible
            const bool highlight = level == 2 && offset == overlap_offset;
            out += "    <rect";
            if (highlight) out += " class=\"overlap\"";
            out += " x=\"" + fmt(x) + "\" y=\"" + fmt(yy) + "\" width=\"" + fmt(w) +
                   "\" height=\"" + fmt(bar_height) + "\"";
            out += highlight ? " fill=\"#3366cc\" fill-opacity=\"0.8\" stroke=\"#3366cc\""
                             : " fill=\"none\" stroke=\"#000000\"";
            out += "/>\n";
            ++index;
        }
        out += "    <text x=\"" + fmt(margin_x + 612.0) + "\" y=\"" + fmt(y + 10.0) +
               "\" font-size=\"10\">n=" + std::to_string(level) + "</text>\n";
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ebeta

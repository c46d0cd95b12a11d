// SPDX-License-Identifier: Apache-2.0
#include "lifelines/svg.hpp"

#include <cmath>
#include <cstdio>

namespace lifelines {

namespace {

void append_number(std::string& out, double v) {
    char buf[48];
    // Avoid "-0.000000".
    if (std::abs(v) < 5e-7) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

void append_point(std::string& out, Point p, double height) {
    append_number(out, p.x);
    out += ' ';
    append_number(out, height - p.y);
}

}  // namespace

std::string render_svg(const ColoredDrawing& drawing, const SvgStyle& style) {
    const double w = drawing.canvas.width;
    const double h = drawing.canvas.height;
    const long px_h = std::lround(style.size * h / w);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.size) + "\" height=\"" +
           std::to_string(px_h) + "\" viewBox=\"0 0 ";
    append_number(out, w);
    out += ' ';
    append_number(out, h);
    out += "\">\n";

    out += "<rect x=\"0\" y=\"0\" width=\"";
    append_number(out, w);
    out += "\" height=\"";
    append_number(out, h);
    out += "\" fill=\"" + style.background + "\"/>\n";

    out += "<g fill-rule=\"evenodd\" stroke=\"none\">\n";
    for (const ColoredFace& face : drawing.faces) {
        out += "<path class=\"face\" data-winding=\"" + std::to_string(face.winding) + "\" fill=\"" +
               face.color.hex() + "\" d=\"";
        for (const auto& ring : face.rings) {
            for (std::size_t i = 0; i < ring.size(); ++i) {
                out += i == 0 ? "M" : " L";
                append_point(out, ring[i], h);
            }
            out += " Z ";
        }
        if (!face.rings.empty()) out.pop_back();
        out += "\"/>\n";
    }
    out += "</g>\n";

    out += "<polyline class=\"stroke\" fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"";
    append_number(out, style.stroke_width * w);
    out += "\" stroke-linejoin=\"round\" stroke-linecap=\"round\" points=\"";
    for (std::size_t i = 0; i < drawing.curve.size(); ++i) {
        if (i) out += ' ';
        append_number(out, drawing.curve[i].x);
        out += ',';
        append_number(out, h - drawing.curve[i].y);
    }
    out += "\"/>\n</svg>\n";
    return out;
}

}  // namespace lifelines

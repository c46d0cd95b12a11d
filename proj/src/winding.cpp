// SPDX-License-Identifier: Apache-2.0
#include "lifelines/winding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>

#include "lifelines/error.hpp"

namespace lifelines {

std::string Rgb::hex() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", r, g, b);
    return buf;
}

Rgb Rgb::from_hex(const std::string& text) {
    unsigned r = 0, g = 0, b = 0;
    if (text.size() != 7 || text[0] != '#' || std::sscanf(text.c_str() + 1, "%2x%2x%2x", &r, &g, &b) != 3) {
        throw Error(ErrorCode::BadRequest, "bad color '" + text + "'");
    }
    return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)};
}

namespace {

Rgb hsl_to_rgb(double hue_deg, double s, double l) {
    const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
    const double hp = hue_deg / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    const double m = l - c / 2.0;
    auto channel = [&](double v) { return static_cast<std::uint8_t>(std::lround(std::clamp(v + m, 0.0, 1.0) * 255.0)); };
    return {channel(r), channel(g), channel(b)};
}

}  // namespace

Palette Palette::hue_wheel(std::size_t count, int offset) {
    Palette p;
    p.offset = offset;
    for (std::size_t k = 0; k < count; ++k) {
        p.colors.push_back(hsl_to_rgb(360.0 * static_cast<double>(k) / static_cast<double>(count), 0.65, 0.55));
    }
    return p;
}

const Rgb& Palette::color_for(int winding) const {
    const long long n = static_cast<long long>(colors.size());
    long long idx = (static_cast<long long>(winding) + offset) % n;
    if (idx < 0) idx += n;
    return colors[static_cast<std::size_t>(idx)];
}

int winding_at_point(const ClosedChain& chain, Point q) {
    const auto& pts = chain.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (point_segment_distance(q, pts[i], pts[i + 1]) < kGridStep) {
            throw Error(ErrorCode::PointOnCurve, "query point lies on the drawing");
        }
    }
    int winding = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Point a = pts[i];
        const Point b = pts[i + 1];
        const double side = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
        if (a.y <= q.y) {
            if (b.y > q.y && side > 0) ++winding;
        } else if (b.y <= q.y && side < 0) {
            --winding;
        }
    }
    return winding;
}

WindingMap compute_winding(const Arrangement& arr) {
    const auto& half_edges = arr.half_edges();
    std::vector<std::vector<std::size_t>> boundary(arr.faces().size());
    for (const HalfEdge& h : half_edges) boundary[h.face].push_back(h.id);

    constexpr int kUnset = std::numeric_limits<int>::min();
    WindingMap winding(arr.faces().size(), kUnset);
    std::deque<std::size_t> queue{arr.unbounded_face()};
    winding[arr.unbounded_face()] = 0;
    while (!queue.empty()) {
        const std::size_t f = queue.front();
        queue.pop_front();
        for (std::size_t h : boundary[f]) {
            // Left of the drawing is one more than right of it.
            const std::size_t g = half_edges[half_edges[h].twin].face;
            if (winding[g] != kUnset) continue;
            winding[g] = winding[f] - half_edges[h].curve_dir;
            queue.push_back(g);
        }
    }
    return winding;
}

ColoredDrawing color_faces(const Arrangement& arr, const WindingMap& windings, const Palette& palette) {
    ColoredDrawing out;
    out.canvas = arr.source().canvas;
    out.palette_offset = palette.offset;
    const auto& src = arr.source().points;
    out.curve.assign(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(arr.source().curve_vertices));
    for (const Face& f : arr.faces()) {
        if (f.is_unbounded) continue;
        const int w = windings[f.id];
        out.faces.push_back({f.id, arr.face_rings(f.id), w, palette.color_for(w)});
    }
    return out;
}

ColoredDrawing recolor(const ColoredDrawing& colored, const Palette& palette, int new_offset) {
    Palette rotated = palette;
    rotated.offset = new_offset;
    ColoredDrawing out = colored;
    out.palette_offset = new_offset;
    for (ColoredFace& f : out.faces) f.color = rotated.color_for(f.winding);
    return out;
}

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#include "lifelines/curve.hpp"

#include <algorithm>
#include <string>

#include "lifelines/error.hpp"

namespace lifelines {

namespace {

bool inside_canvas(Point p, const Canvas& c) {
    return p.x >= -kCanvasSlack && p.x <= c.width + kCanvasSlack && p.y >= -kCanvasSlack &&
           p.y <= c.height + kCanvasSlack;
}

}  // namespace

std::vector<Point> collapse_duplicates(std::span<const Point> points) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const Point& p : points) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    return out;
}

Polyline validate_stroke(const RawStroke& raw) {
    const Canvas& canvas = raw.canvas;
    if (!std::isfinite(canvas.width) || !std::isfinite(canvas.height)) {
        throw Error(ErrorCode::NonFinite, "canvas size is not finite");
    }
    if (canvas.width <= 0.0 || canvas.height <= 0.0) {
        throw Error(ErrorCode::OutOfCanvas, "canvas must have positive width and height");
    }
    for (std::size_t i = 0; i < raw.points.size(); ++i) {
        if (!is_finite(raw.points[i])) {
            throw Error(ErrorCode::NonFinite, "point " + std::to_string(i) + " is not finite");
        }
    }
    for (std::size_t i = 0; i < raw.points.size(); ++i) {
        if (!inside_canvas(raw.points[i], canvas)) {
            throw Error(ErrorCode::OutOfCanvas, "point " + std::to_string(i) + " lies outside the canvas");
        }
    }

    std::vector<Point> points = collapse_duplicates(raw.points);
    if (points.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "a stroke needs at least two distinct points");
    }
    if (points.back().x <= points.front().x) {
        throw Error(ErrorCode::NotLeftToRight, "the stroke must end to the right of where it starts");
    }

    for (Point& p : points) {
        p.x = std::clamp(p.x, 0.0, canvas.width);
        p.y = std::clamp(p.y, 0.0, canvas.height);
    }
    points.front().x = 0.0;
    points.back().x = canvas.width;

    return Polyline{collapse_duplicates(points), canvas};
}

CanonicalCurve resample(const Polyline& polyline, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::BadSampleCount, "sample count must be at least 2");
    const std::vector<Point> points = collapse_duplicates(polyline.points);
    if (points.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "a stroke needs at least two distinct points");
    }

    std::vector<double> cumulative(points.size(), 0.0);
    for (std::size_t i = 1; i < points.size(); ++i) {
        cumulative[i] = cumulative[i - 1] + distance(points[i - 1], points[i]);
    }
    const double total = cumulative.back();

    std::vector<Point> out;
    out.reserve(n);
    out.push_back(points.front());
    std::size_t seg = 1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double target = total * static_cast<double>(k) / static_cast<double>(n - 1);
        while (seg + 1 < points.size() && cumulative[seg] < target) ++seg;
        const double seg_len = cumulative[seg] - cumulative[seg - 1];
        const double t = seg_len > 0.0 ? std::clamp((target - cumulative[seg - 1]) / seg_len, 0.0, 1.0) : 0.0;
        const Point& a = points[seg - 1];
        const Point& b = points[seg];
        out.push_back(t == 1.0 ? b : Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
    out.push_back(points.back());
    return CanonicalCurve(std::move(out), polyline.canvas);
}

CanonicalCurve canonicalize(const RawStroke& raw, std::size_t n) {
    return resample(validate_stroke(raw), n);
}

CanonicalCurve adopt_canonical(std::vector<Point> points, Canvas canvas) {
    if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "a canonical curve has at least two points");
    for (const Point& p : points) {
        if (!is_finite(p)) throw Error(ErrorCode::NonFinite, "stored point is not finite");
        if (!inside_canvas(p, canvas)) throw Error(ErrorCode::OutOfCanvas, "stored point lies outside the canvas");
    }
    if (points.front().x != 0.0 || points.back().x != canvas.width) {
        throw Error(ErrorCode::NotLeftToRight, "stored curve does not span the canvas from left to right");
    }
    return CanonicalCurve(std::move(points), canvas);
}

ClosedChain close_polyline(std::span<const Point> points, Canvas canvas) {
    ClosedChain chain;
    chain.canvas = canvas;
    chain.points = collapse_duplicates(points);
    chain.curve_vertices = chain.points.size();

    const double w = canvas.width;
    const double h = canvas.height;
    const Point first = chain.points.front();
    const Point last = chain.points.back();
    chain.points.push_back({1.1 * w, last.y});
    chain.points.push_back({1.1 * w, -0.1 * h});
    chain.points.push_back({-0.1 * w, -0.1 * h});
    chain.points.push_back({-0.1 * w, first.y});
    chain.points.push_back(first);
    return chain;
}

ClosedChain close_curve(const CanonicalCurve& curve) {
    return close_polyline(curve.points(), curve.canvas());
}

}  // namespace lifelines

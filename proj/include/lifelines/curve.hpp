// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lifelines/geometry.hpp"

namespace lifelines {

inline constexpr std::size_t kDefaultSampleCount = 256;
inline constexpr double kCanvasSlack = 1e-6;

/// A stroke as captured, before any validation.
struct RawStroke {
    std::vector<Point> points;
    Canvas canvas;
};

/// Output of validate_stroke: deduplicated, endpoints snapped to the left and
/// right canvas edges, every point inside the canvas.
struct Polyline {
    std::vector<Point> points;
    Canvas canvas;
};

/// Validated, endpoint-snapped polyline resampled uniformly by arc length.
/// Only produced by resample() or adopt_canonical().
class CanonicalCurve {
public:
    CanonicalCurve() = default;

    const std::vector<Point>& points() const { return points_; }
    const Canvas& canvas() const { return canvas_; }
    std::size_t size() const { return points_.size(); }

    friend bool operator==(const CanonicalCurve&, const CanonicalCurve&) = default;

private:
    friend CanonicalCurve resample(const Polyline&, std::size_t);
    friend CanonicalCurve adopt_canonical(std::vector<Point>, Canvas);

    CanonicalCurve(std::vector<Point> points, Canvas canvas)
        : points_(std::move(points)), canvas_(canvas) {}

    std::vector<Point> points_;
    Canvas canvas_;
};

/// Closed polygonal chain: the drawing followed by the return path that runs
/// around the outside of the canvas back to the start. front() == back().
struct ClosedChain {
    std::vector<Point> points;
    /// Number of leading vertices that belong to the drawing itself.
    std::size_t curve_vertices = 0;
    Canvas canvas;

    std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
};

Polyline validate_stroke(const RawStroke& raw);

/// Throws BadSampleCount when n < 2 and TooFewPoints when the polyline has
/// no two distinct points.
CanonicalCurve resample(const Polyline& polyline, std::size_t n);

/// validate_stroke followed by resample at `n` points.
CanonicalCurve canonicalize(const RawStroke& raw, std::size_t n = kDefaultSampleCount);

/// Wraps already-canonical stored points (e.g. read back from the gallery
/// log) after checking the endpoint and canvas invariants.
CanonicalCurve adopt_canonical(std::vector<Point> points, Canvas canvas);

ClosedChain close_curve(const CanonicalCurve& curve);

/// Closes any polyline that starts on the left edge and ends on the right
/// edge; consecutive duplicate points are collapsed first.
ClosedChain close_polyline(std::span<const Point> points, Canvas canvas);

/// Removes consecutive exact duplicates.
std::vector<Point> collapse_duplicates(std::span<const Point> points);

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace lifelines {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double squared_distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Every distance in the library goes through this so that independently
// computed values compare exactly.
inline double distance(Point a, Point b) { return std::sqrt(squared_distance(a, b)); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Canvas rectangle [0, width] x [0, height], y pointing up.
struct Canvas {
    double width = 1.0;
    double height = 1.0;

    double diagonal() const { return std::hypot(width, height); }

    friend bool operator==(const Canvas&, const Canvas&) = default;
};

struct Box {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    friend bool operator==(const Box&, const Box&) = default;
};

Box bounding_box(std::span<const Point> points);

/// Euclidean distance between two axis-aligned boxes (0 when they overlap).
double box_separation(const Box& a, const Box& b);

/// Distance from a point to a box (0 inside).
double point_box_distance(Point p, const Box& b);

/// Distance from q to segment [a, b].
double point_segment_distance(Point q, Point a, Point b);

double polyline_length(std::span<const Point> points);

/// Signed shoelace area of the closed ring through `points` (first point
/// need not be repeated). Counterclockwise is positive.
double signed_area(std::span<const Point> ring);

}  // namespace lifelines

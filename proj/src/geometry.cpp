// SPDX-License-Identifier: Apache-2.0
#include "lifelines/geometry.hpp"

#include <algorithm>

namespace lifelines {

Box bounding_box(std::span<const Point> points) {
    Box box{points.front().x, points.front().y, points.front().x, points.front().y};
    for (const Point& p : points) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

double box_separation(const Box& a, const Box& b) {
    const double dx = std::max({0.0, a.min_x - b.max_x, b.min_x - a.max_x});
    const double dy = std::max({0.0, a.min_y - b.max_y, b.min_y - a.max_y});
    return std::sqrt(dx * dx + dy * dy);
}

double point_box_distance(Point p, const Box& b) {
    const double dx = std::max({0.0, b.min_x - p.x, p.x - b.max_x});
    const double dy = std::max({0.0, b.min_y - p.y, p.y - b.max_y});
    return std::sqrt(dx * dx + dy * dy);
}

double point_segment_distance(Point q, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return distance(q, a);
    double t = ((q.x - a.x) * ab.x + (q.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(q, a + t * ab);
}

double polyline_length(std::span<const Point> points) {
    double total = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) total += distance(points[i - 1], points[i]);
    return total;
}

double signed_area(std::span<const Point> ring) {
    if (ring.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % ring.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * twice;
}

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lifelines::testkit {

namespace {

// Map into [0.02, 0.98]^2 keeping the direction of travel.
RawStroke fit_to_canvas(std::vector<Point> pts) {
    const Box box = bounding_box(pts);
    const double sx = box.max_x > box.min_x ? 0.96 / (box.max_x - box.min_x) : 1.0;
    const double sy = box.max_y > box.min_y ? 0.96 / (box.max_y - box.min_y) : 1.0;
    for (Point& p : pts) p = {0.02 + (p.x - box.min_x) * sx, 0.02 + (p.y - box.min_y) * sy};
    return {std::move(pts), Canvas{}};
}

}  // namespace

RawStroke loopy_stroke(Rng& rng, std::size_t points) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> tremor(0.0, 0.002);
    const int harmonics = 1 + static_cast<int>(rng() % 3);
    struct Wave {
        double freq, ax, ay, px, py;
    };
    std::vector<Wave> waves;
    for (int h = 0; h < harmonics; ++h) {
        waves.push_back({2.0 + 8.0 * unit(rng), 0.02 + 0.1 * unit(rng), 0.05 + 0.25 * unit(rng),
                         2.0 * std::numbers::pi * unit(rng), 2.0 * std::numbers::pi * unit(rng)});
    }
    std::vector<Point> pts;
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        double x = t;
        double y = 0.0;
        for (const Wave& w : waves) {
            x += w.ax * std::sin(2.0 * std::numbers::pi * w.freq * t + w.px);
            y += w.ay * std::cos(2.0 * std::numbers::pi * w.freq * t + w.py);
        }
        pts.push_back({x + tremor(rng), y + tremor(rng)});
    }
    // The drift dominates, but make sure of it.
    if (pts.back().x <= pts.front().x) {
        for (Point& p : pts) p.x = -p.x;
    }
    return fit_to_canvas(std::move(pts));
}

RawStroke wandering_stroke(Rng& rng, std::size_t points) {
    std::normal_distribution<double> turn(0.0, 0.45);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double heading = 2.0 * std::numbers::pi * unit(rng);
    std::vector<Point> pts{{0.0, 0.0}};
    for (std::size_t i = 1; i < points; ++i) {
        heading += turn(rng);
        const double step = 0.5 + unit(rng);
        pts.push_back({pts.back().x + step * std::cos(heading), pts.back().y + step * std::sin(heading)});
    }
    if (pts.back().x <= pts.front().x) {
        for (Point& p : pts) p.x = -p.x;
    }
    if (pts.back().x == pts.front().x) pts.back().x += 1.0;
    return fit_to_canvas(std::move(pts));
}

RawStroke random_stroke(Rng& rng, std::size_t points) {
    return rng() % 2 == 0 ? loopy_stroke(rng, points) : wandering_stroke(rng, points);
}

CanonicalCurve random_curve(Rng& rng, std::size_t samples) {
    const std::size_t points = 64 + rng() % 449;
    return canonicalize(random_stroke(rng, points), samples);
}

std::vector<Point> random_points(Rng& rng, std::size_t n, double scale) {
    std::uniform_real_distribution<double> coord(0.0, scale);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    return pts;
}

}  // namespace lifelines::testkit

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <vector>

#include "lifelines/curve.hpp"

namespace lifelines::testkit {

using Rng = std::mt19937_64;

/// Stroke made of a left-to-right drift plus a few sinusoids strong enough
/// to fold back on themselves; produces loops and nested loops.
RawStroke loopy_stroke(Rng& rng, std::size_t points);

/// Turning random walk, mirrored if needed so it ends right of its start.
RawStroke wandering_stroke(Rng& rng, std::size_t points);

/// Alternates between the two shapes.
RawStroke random_stroke(Rng& rng, std::size_t points);

/// Canonical curve from a random stroke with 64..512 input points.
CanonicalCurve random_curve(Rng& rng, std::size_t samples = kDefaultSampleCount);

/// Uniform points in [0, scale]^2.
std::vector<Point> random_points(Rng& rng, std::size_t n, double scale = 1.0);

}  // namespace lifelines::testkit

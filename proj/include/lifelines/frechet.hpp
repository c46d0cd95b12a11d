// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lifelines/geometry.hpp"

namespace lifelines {

struct IndexPair {
    std::size_t i = 0;  // into A
    std::size_t j = 0;  // into B

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Monotone pairing from (0,0) to (m-1,n-1); every step advances i, j or both by one.
using Coupling = std::vector<IndexPair>;

struct FrechetResult {
    double distance = 0.0;
    Coupling coupling;
};

/// Discrete Fréchet distance with one optimal coupling. Among equally good
/// predecessors the backtrack takes the diagonal, then the i-step, then the
/// j-step. Throws EmptyCurve.
FrechetResult discrete_frechet(std::span<const Point> a, std::span<const Point> b);

/// Same value as discrete_frechet(a, b).distance, in O(|b|) memory.
double discrete_frechet_distance(std::span<const Point> a, std::span<const Point> b);

/// Row-by-row evaluation that gives up as soon as every entry of a row
/// exceeds `bound` (each coupling visits every row, so the row minimum is a
/// lower bound). Returns the exact distance otherwise.
std::optional<double> discrete_frechet_within(std::span<const Point> a, std::span<const Point> b, double bound);

/// Continuous Fréchet decision: is the distance between polylines a and b at
/// most eps? Free-space reachability, cell by cell.
bool frechet_decision(std::span<const Point> a, std::span<const Point> b, double eps);

/// Bisection on frechet_decision between the endpoint lower bound and the
/// discrete distance; returns the bracket midpoint once it is at most tol wide.
double continuous_frechet(std::span<const Point> a, std::span<const Point> b, double tol);

/// 1e-6 of the canvas diagonal.
double default_frechet_tolerance(const Canvas& canvas);

}  // namespace lifelines

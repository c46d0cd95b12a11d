// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lifelines/curve.hpp"
#include "lifelines/geometry.hpp"

namespace lifelines {

/// Snap-rounding grid: 2^-20 canvas units.
inline constexpr double kGridScale = 1048576.0;
inline constexpr double kGridStep = 1.0 / kGridScale;

/// Above this many segments intersection discovery switches from all-pairs
/// to a sweep over x.
inline constexpr std::size_t kSweepThreshold = 512;

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

GridPoint snap(Point p);
Point unsnap(GridPoint g);

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn.
int orientation(GridPoint a, GridPoint b, GridPoint c);

enum class ContactKind { Crossing, Touch };

struct Intersection {
    std::size_t segment_a = 0;  // index into the chain, segment_a < segment_b
    std::size_t segment_b = 0;
    Point point;
    ContactKind kind = ContactKind::Crossing;

    friend bool operator==(const Intersection&, const Intersection&) = default;
};

/// All contacts between non-adjacent segments of the grid-snapped chain,
/// sorted by (segment_a, segment_b). Crossings are rounded to the grid.
/// Throws DegenerateOverlap on collinear overlapping segments.
std::vector<Intersection> find_intersections(const ClosedChain& chain);

/// Same contract, forcing the strategy. Exposed so the two can be compared.
std::vector<Intersection> find_intersections_all_pairs(const ClosedChain& chain);
std::vector<Intersection> find_intersections_sweep(const ClosedChain& chain);

class ArrangementBuilder;

struct Vertex {
    std::size_t id = 0;
    Point position;
    GridPoint grid;
};

struct HalfEdge {
    std::size_t id = 0;
    std::size_t origin = 0;
    std::size_t twin = 0;
    std::size_t next = 0;
    std::size_t face = 0;
    /// +1 when this half-edge runs along the drawing's orientation.
    int curve_dir = 1;
};

struct Face {
    std::size_t id = 0;
    /// Some half-edge of the outer boundary cycle; empty for the unbounded face.
    std::optional<std::size_t> outer_boundary;
    /// One half-edge per inner boundary cycle.
    std::vector<std::size_t> holes;
    bool is_unbounded = false;
};

/// Half-edge planar subdivision induced by a closed chain. Immutable once
/// built. Half-edges 2k and 2k+1 are twins; the even one follows the chain.
class Arrangement {
public:
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const ClosedChain& source() const { return source_; }

    std::size_t edge_count() const { return half_edges_.size() / 2; }
    std::size_t unbounded_face() const { return unbounded_; }

    std::size_t destination(std::size_t half_edge) const {
        return half_edges_[half_edges_[half_edge].twin].origin;
    }

    /// Half-edge ids of the next-cycle through `start`.
    std::vector<std::size_t> cycle(std::size_t start) const;

    /// Coordinates of a boundary cycle, in walking order (not repeated at the end).
    std::vector<Point> ring(std::size_t start) const;

    /// Outer ring followed by hole rings; empty for the unbounded face.
    std::vector<std::vector<Point>> face_rings(std::size_t face) const;

    /// Signed area enclosed by the outer boundary of a bounded face.
    double face_area(std::size_t face) const;

private:
    friend class ArrangementBuilder;

    std::vector<Vertex> vertices_;
    std::vector<HalfEdge> half_edges_;
    std::vector<Face> faces_;
    std::size_t unbounded_ = 0;
    ClosedChain source_;
};

/// Throws DegenerateOverlap when the chain retraces itself.
Arrangement build_arrangement(const ClosedChain& chain);

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#include "lifelines/arrangement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "lifelines/error.hpp"

namespace lifelines {

namespace {

using Wide = __int128;

Wide cross(GridPoint o, GridPoint a, GridPoint b) {
    return Wide(a.x - o.x) * Wide(b.y - o.y) - Wide(a.y - o.y) * Wide(b.x - o.x);
}

Wide dot(GridPoint o, GridPoint a, GridPoint b) {
    return Wide(a.x - o.x) * Wide(b.x - o.x) + Wide(a.y - o.y) * Wide(b.y - o.y);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

// Nearest-integer quotient, ties away from zero.
std::int64_t round_div(Wide num, Wide den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num >= 0) return static_cast<std::int64_t>((2 * num + den) / (2 * den));
    return -static_cast<std::int64_t>((-2 * num + den) / (2 * den));
}

struct Contact {
    enum class Type { None, Point, Overlap };
    Type type = Type::None;
    GridPoint point;
    bool proper = false;
};

Contact classify(GridPoint a, GridPoint b, GridPoint c, GridPoint d) {
    const int o1 = sign(cross(a, b, c));
    const int o2 = sign(cross(a, b, d));
    if (o1 == 0 && o2 == 0) {
        const Wide len = dot(a, b, b);
        const Wide tc = dot(a, b, c);
        const Wide td = dot(a, b, d);
        const Wide lo = std::max<Wide>(0, std::min(tc, td));
        const Wide hi = std::min(len, std::max(tc, td));
        if (lo > hi) return {};
        if (lo == hi) return {Contact::Type::Point, hi == 0 ? a : b, false};
        return {Contact::Type::Overlap, {}, false};
    }
    const int o3 = sign(cross(c, d, a));
    const int o4 = sign(cross(c, d, b));
    if (o1 * o2 > 0 || o3 * o4 > 0) return {};
    if (o1 == 0) return {Contact::Type::Point, c, false};
    if (o2 == 0) return {Contact::Type::Point, d, false};
    if (o3 == 0) return {Contact::Type::Point, a, false};
    if (o4 == 0) return {Contact::Type::Point, b, false};

    const GridPoint ab{b.x - a.x, b.y - a.y};
    const GridPoint cd{d.x - c.x, d.y - c.y};
    const Wide num = Wide(c.x - a.x) * cd.y - Wide(c.y - a.y) * cd.x;
    const Wide den = Wide(ab.x) * cd.y - Wide(ab.y) * cd.x;
    const GridPoint p{a.x + round_div(num * ab.x, den), a.y + round_div(num * ab.y, den)};
    return {Contact::Type::Point, p, true};
}

struct Segment {
    GridPoint a;
    GridPoint b;
};

struct Extent {
    std::int64_t min_x, max_x, min_y, max_y;
};

Extent extent(const Segment& s) {
    return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)};
}

bool extents_overlap(const Extent& e, const Extent& f) {
    return e.min_x <= f.max_x && f.min_x <= e.max_x && e.min_y <= f.max_y && f.min_y <= e.max_y;
}

std::vector<std::pair<std::size_t, std::size_t>> candidates_all_pairs(const std::vector<Segment>& segs) {
    std::vector<Extent> ext(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) ext[i] = extent(segs[i]);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (extents_overlap(ext[i], ext[j])) out.emplace_back(i, j);
        }
    }
    return out;
}

// Sweep a vertical line left to right keeping the segments whose x-range
// contains it; only those can meet the segment being inserted.
std::vector<std::pair<std::size_t, std::size_t>> candidates_sweep(const std::vector<Segment>& segs) {
    std::vector<Extent> ext(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) ext[i] = extent(segs[i]);
    std::vector<std::size_t> order(segs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return std::pair(ext[l].min_x, l) < std::pair(ext[r].min_x, r);
    });

    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::size_t> active;
    for (std::size_t idx : order) {
        const Extent& e = ext[idx];
        std::erase_if(active, [&](std::size_t other) { return ext[other].max_x < e.min_x; });
        for (std::size_t other : active) {
            if (ext[other].min_y <= e.max_y && e.min_y <= ext[other].max_y) {
                out.emplace_back(std::min(idx, other), std::max(idx, other));
            }
        }
        active.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> candidates(const std::vector<Segment>& segs) {
    return segs.size() > kSweepThreshold ? candidates_sweep(segs) : candidates_all_pairs(segs);
}

// Grid-snapped chain with consecutive duplicates removed. source[k] is the
// index of the original chain segment that cleaned segment k came from.
struct SnappedChain {
    std::vector<Segment> segments;
    std::vector<std::size_t> source;
};

SnappedChain snap_chain(const ClosedChain& chain, Point offset) {
    SnappedChain out;
    if (chain.points.size() < 2) return out;
    GridPoint prev = snap(chain.points.front() + offset);
    for (std::size_t i = 1; i < chain.points.size(); ++i) {
        const GridPoint g = snap(chain.points[i] + offset);
        if (g == prev) continue;
        out.segments.push_back({prev, g});
        out.source.push_back(i - 1);
        prev = g;
    }
    return out;
}

bool adjacent(std::size_t i, std::size_t j, std::size_t m) {
    return j == i + 1 || (i == 0 && j + 1 == m);
}

std::vector<Intersection> intersections_from(
    const ClosedChain& chain, std::vector<std::pair<std::size_t, std::size_t>> (*gen)(const std::vector<Segment>&)) {
    const SnappedChain sc = snap_chain(chain, {0.0, 0.0});
    const std::size_t m = sc.segments.size();
    std::vector<Intersection> out;
    for (auto [i, j] : gen(sc.segments)) {
        const Segment& s = sc.segments[i];
        const Segment& t = sc.segments[j];
        const Contact c = classify(s.a, s.b, t.a, t.b);
        if (c.type == Contact::Type::Overlap) {
            throw Error(ErrorCode::DegenerateOverlap, "segments " + std::to_string(sc.source[i]) + " and " +
                                                          std::to_string(sc.source[j]) + " overlap");
        }
        if (c.type == Contact::Type::None || adjacent(i, j, m)) continue;
        out.push_back({sc.source[i], sc.source[j], unsnap(c.point),
                       c.proper ? ContactKind::Crossing : ContactKind::Touch});
    }
    std::sort(out.begin(), out.end(), [](const Intersection& l, const Intersection& r) {
        return std::tie(l.segment_a, l.segment_b) < std::tie(r.segment_a, r.segment_b);
    });
    return out;
}

struct OverlapFound {};

constexpr int kMaxRefinePasses = 16;

// Splits segments at every contact until no two segments meet except at
// shared endpoints. Splitting at a rounded crossing bends the pieces by less
// than one grid cell, which can create new contacts; hence the loop.
std::vector<Segment> planarize(std::vector<Segment> segs) {
    for (int pass = 0; pass < kMaxRefinePasses; ++pass) {
        std::vector<std::vector<GridPoint>> splits(segs.size());
        bool changed = false;
        for (auto [i, j] : candidates(segs)) {
            const Segment& s = segs[i];
            const Segment& t = segs[j];
            const Contact c = classify(s.a, s.b, t.a, t.b);
            if (c.type == Contact::Type::None) continue;
            if (c.type == Contact::Type::Overlap) throw OverlapFound{};
            if (c.point != s.a && c.point != s.b) {
                splits[i].push_back(c.point);
                changed = true;
            }
            if (c.point != t.a && c.point != t.b) {
                splits[j].push_back(c.point);
                changed = true;
            }
        }
        if (!changed) return segs;

        std::vector<Segment> next;
        next.reserve(segs.size() * 2);
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const Segment& s = segs[i];
            auto& pts = splits[i];
            std::sort(pts.begin(), pts.end(), [&](GridPoint l, GridPoint r) {
                return dot(s.a, s.b, l) < dot(s.a, s.b, r);
            });
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            GridPoint from = s.a;
            for (const GridPoint& p : pts) {
                if (p == from || p == s.b) continue;
                next.push_back({from, p});
                from = p;
            }
            next.push_back({from, s.b});
        }
        segs = std::move(next);
    }
    throw OverlapFound{};
}

bool upper_half(const GridPoint& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

}  // namespace

GridPoint snap(Point p) {
    return {static_cast<std::int64_t>(std::llround(p.x * kGridScale)),
            static_cast<std::int64_t>(std::llround(p.y * kGridScale))};
}

Point unsnap(GridPoint g) {
    return {static_cast<double>(g.x) * kGridStep, static_cast<double>(g.y) * kGridStep};
}

int orientation(GridPoint a, GridPoint b, GridPoint c) { return sign(cross(a, b, c)); }

std::vector<Intersection> find_intersections_all_pairs(const ClosedChain& chain) {
    return intersections_from(chain, &candidates_all_pairs);
}

std::vector<Intersection> find_intersections_sweep(const ClosedChain& chain) {
    return intersections_from(chain, &candidates_sweep);
}

std::vector<Intersection> find_intersections(const ClosedChain& chain) {
    return chain.segment_count() > kSweepThreshold ? find_intersections_sweep(chain)
                                                   : find_intersections_all_pairs(chain);
}

std::vector<std::size_t> Arrangement::cycle(std::size_t start) const {
    std::vector<std::size_t> out;
    std::size_t h = start;
    do {
        out.push_back(h);
        h = half_edges_[h].next;
    } while (h != start);
    return out;
}

std::vector<Point> Arrangement::ring(std::size_t start) const {
    std::vector<Point> out;
    for (std::size_t h : cycle(start)) out.push_back(vertices_[half_edges_[h].origin].position);
    return out;
}

std::vector<std::vector<Point>> Arrangement::face_rings(std::size_t face) const {
    std::vector<std::vector<Point>> rings;
    const Face& f = faces_[face];
    if (f.is_unbounded) return rings;
    rings.push_back(ring(*f.outer_boundary));
    for (std::size_t h : f.holes) rings.push_back(ring(h));
    return rings;
}

double Arrangement::face_area(std::size_t face) const {
    const Face& f = faces_[face];
    if (f.is_unbounded) return 0.0;
    return signed_area(ring(*f.outer_boundary));
}

class ArrangementBuilder {
public:
    static Arrangement build(const ClosedChain& chain, Point offset) {
        const std::vector<Segment> edges = planarize(snap_chain(chain, offset).segments);

        Arrangement arr;
        arr.source_ = chain;

        std::map<GridPoint, std::size_t> ids;
        auto vertex_id = [&](GridPoint g) {
            auto [it, inserted] = ids.try_emplace(g, arr.vertices_.size());
            if (inserted) arr.vertices_.push_back({it->second, unsnap(g) - offset, g});
            return it->second;
        };

        arr.half_edges_.reserve(edges.size() * 2);
        for (const Segment& s : edges) {
            const std::size_t u = vertex_id(s.a);
            const std::size_t v = vertex_id(s.b);
            const std::size_t h = arr.half_edges_.size();
            arr.half_edges_.push_back({h, u, h + 1, 0, 0, +1});
            arr.half_edges_.push_back({h + 1, v, h, 0, 0, -1});
        }

        // Outgoing half-edges around each vertex, counterclockwise.
        std::vector<std::vector<std::size_t>> outgoing(arr.vertices_.size());
        for (const HalfEdge& h : arr.half_edges_) outgoing[h.origin].push_back(h.id);
        auto direction = [&](std::size_t h) {
            const GridPoint o = arr.vertices_[arr.half_edges_[h].origin].grid;
            const GridPoint d = arr.vertices_[arr.destination(h)].grid;
            return GridPoint{d.x - o.x, d.y - o.y};
        };
        std::vector<std::size_t> slot(arr.half_edges_.size());
        for (auto& around : outgoing) {
            std::sort(around.begin(), around.end(), [&](std::size_t l, std::size_t r) {
                const GridPoint a = direction(l);
                const GridPoint b = direction(r);
                const bool ua = upper_half(a);
                const bool ub = upper_half(b);
                if (ua != ub) return ua;
                return cross({0, 0}, a, b) > 0;
            });
            for (std::size_t k = 0; k < around.size(); ++k) slot[around[k]] = k;
        }

        // The face left of u->v continues with the edge leaving v just
        // clockwise of v->u.
        for (HalfEdge& h : arr.half_edges_) {
            const auto& around = outgoing[arr.half_edges_[h.twin].origin];
            const std::size_t k = slot[h.twin];
            h.next = around[(k + around.size() - 1) % around.size()];
        }

        constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
        for (HalfEdge& h : arr.half_edges_) h.face = kUnassigned;
        std::size_t unbounded_count = 0;
        for (std::size_t start = 0; start < arr.half_edges_.size(); ++start) {
            if (arr.half_edges_[start].face != kUnassigned) continue;
            const std::size_t face = arr.faces_.size();
            Wide twice_area = 0;
            std::size_t h = start;
            do {
                arr.half_edges_[h].face = face;
                const GridPoint p = arr.vertices_[arr.half_edges_[h].origin].grid;
                const GridPoint q = arr.vertices_[arr.destination(h)].grid;
                twice_area += Wide(p.x) * q.y - Wide(q.x) * p.y;
                h = arr.half_edges_[h].next;
            } while (h != start);

            Face f;
            f.id = face;
            if (twice_area > 0) {
                f.outer_boundary = start;
            } else {
                f.is_unbounded = true;
                f.holes.push_back(start);
                arr.unbounded_ = face;
                ++unbounded_count;
            }
            arr.faces_.push_back(std::move(f));
        }
        // A closed chain is connected, so exactly one cycle runs clockwise
        // around the whole drawing.
        if (unbounded_count != 1) throw OverlapFound{};
        return arr;
    }
};

Arrangement build_arrangement(const ClosedChain& chain) {
    // The retry offsets translate the input by a fraction of a grid cell.
    // Overlaps introduced only by rounding disappear under such a shift;
    // genuinely retraced strokes do not.
    static constexpr std::array<std::pair<double, double>, 4> kOffsets{
        {{0.0, 0.0}, {0.37, 0.61}, {0.73, 0.19}, {0.11, 0.89}}};
    for (auto [dx, dy] : kOffsets) {
        try {
            return ArrangementBuilder::build(chain, {dx * kGridStep, dy * kGridStep});
        } catch (const OverlapFound&) {
        }
    }
    throw Error(ErrorCode::DegenerateOverlap, "the stroke retraces part of itself");
}

}  // namespace lifelines

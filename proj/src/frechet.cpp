// SPDX-License-Identifier: Apache-2.0
#include "lifelines/frechet.hpp"

#include <algorithm>
#include <cmath>

#include "lifelines/error.hpp"

namespace lifelines {

namespace {

void require_nonempty(std::span<const Point> a, std::span<const Point> b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyCurve, "Fréchet distance needs two non-empty curves");
}

}  // namespace

// The tables hold squared distances; sqrt is monotone and correctly rounded,
// so taking it at the end yields exactly the max/min of the true distances.
FrechetResult discrete_frechet(std::span<const Point> a, std::span<const Point> b) {
    require_nonempty(a, b);
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<double> d(m * n);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * n + j]; };

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double cost = squared_distance(a[i], b[j]);
            double reach;
            if (i == 0 && j == 0) reach = cost;
            else if (i == 0) reach = at(0, j - 1);
            else if (j == 0) reach = at(i - 1, 0);
            else reach = std::min({at(i - 1, j), at(i, j - 1), at(i - 1, j - 1)});
            at(i, j) = std::max(cost, reach);
        }
    }

    FrechetResult result;
    result.distance = std::sqrt(at(m - 1, n - 1));
    std::size_t i = m - 1;
    std::size_t j = n - 1;
    result.coupling.push_back({i, j});
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = at(i - 1, j - 1);
            const double up = at(i - 1, j);
            const double left = at(i, j - 1);
            if (diag <= up && diag <= left) {
                --i;
                --j;
            } else if (up <= left) {
                --i;
            } else {
                --j;
            }
        }
        result.coupling.push_back({i, j});
    }
    std::reverse(result.coupling.begin(), result.coupling.end());
    return result;
}

std::optional<double> discrete_frechet_within(std::span<const Point> a, std::span<const Point> b, double bound) {
    require_nonempty(a, b);
    const std::size_t n = b.size();
    std::vector<double> prev(n);
    std::vector<double> cur(n);

    double row_min = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double cost = squared_distance(a[0], b[j]);
        prev[j] = j == 0 ? cost : std::max(cost, prev[j - 1]);
    }
    row_min = prev[0];
    if (std::sqrt(row_min) > bound) return std::nullopt;

    for (std::size_t i = 1; i < a.size(); ++i) {
        cur[0] = std::max(squared_distance(a[i], b[0]), prev[0]);
        row_min = cur[0];
        for (std::size_t j = 1; j < n; ++j) {
            const double reach = std::min({prev[j], cur[j - 1], prev[j - 1]});
            cur[j] = std::max(squared_distance(a[i], b[j]), reach);
            row_min = std::min(row_min, cur[j]);
        }
        if (std::sqrt(row_min) > bound) return std::nullopt;
        std::swap(prev, cur);
    }
    const double d = std::sqrt(prev[n - 1]);
    if (d > bound) return std::nullopt;
    return d;
}

double discrete_frechet_distance(std::span<const Point> a, std::span<const Point> b) {
    return *discrete_frechet_within(a, b, std::numeric_limits<double>::infinity());
}

namespace {

struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    bool empty() const { return lo > hi; }
};

// Compared after the square root so that the decision agrees exactly with
// distances reported by the dynamic program.
bool within(Point p, Point q, double eps) { return std::sqrt(squared_distance(p, q)) <= eps; }

// Parameters t in [0,1] with |s + t (e - s) - p| <= eps.
Interval free_interval(Point p, Point s, Point e, double eps) {
    const bool start_free = within(p, s, eps);
    const bool end_free = within(p, e, eps);
    const Point dir = e - s;
    const Point rel = s - p;
    const double qa = dir.x * dir.x + dir.y * dir.y;
    const double qb = 2.0 * (rel.x * dir.x + rel.y * dir.y);
    const double qc = rel.x * rel.x + rel.y * rel.y - eps * eps;
    if (qa == 0.0) return start_free ? Interval{0.0, 1.0} : Interval{};
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        if (start_free || end_free) return {start_free ? 0.0 : 1.0, end_free ? 1.0 : 0.0};
        // Tangency can round to a tiny negative discriminant.
        if (disc < -1e-12 * (qb * qb + std::abs(4.0 * qa * qc))) return {};
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    double lo = std::max(0.0, (-qb - root) / (2.0 * qa));
    double hi = std::min(1.0, (-qb + root) / (2.0 * qa));
    // Segment ends decide by the exact test.
    if (start_free) {
        lo = 0.0;
        hi = std::max(hi, 0.0);
    }
    if (end_free) {
        hi = 1.0;
        lo = std::min(lo, 1.0);
    }
    return lo <= hi ? Interval{lo, hi} : Interval{};
}

}  // namespace

bool frechet_decision(std::span<const Point> a, std::span<const Point> b, double eps) {
    require_nonempty(a, b);
    if (eps < 0.0) return false;
    if (!within(a.front(), b.front(), eps) || !within(a.back(), b.back(), eps)) return false;
    // A single point is matched against every vertex of the other curve.
    if (a.size() == 1 || b.size() == 1) {
        const Point p = a.size() == 1 ? a.front() : b.front();
        const auto other = a.size() == 1 ? b : a;
        return std::all_of(other.begin(), other.end(), [&](Point q) { return within(p, q, eps); });
    }

    const std::size_t p = a.size() - 1;  // segments of a
    const std::size_t q = b.size() - 1;  // segments of b

    // left[j]: reachable part of the vertical edge at the current A vertex,
    // over B segment j. bottom: reachable part of the horizontal edge at B
    // vertex j over the current A segment.
    std::vector<Interval> left(q);
    {
        bool open = true;
        for (std::size_t j = 0; j < q; ++j) {
            const Interval f = free_interval(a[0], b[j], b[j + 1], eps);
            left[j] = (open && !f.empty() && f.lo == 0.0) ? f : Interval{};
            open = !left[j].empty() && left[j].hi == 1.0;
        }
    }

    bool bottom_open = true;  // along j = 0, for successive A segments
    for (std::size_t i = 0; i < p; ++i) {
        Interval bottom;
        {
            const Interval f = free_interval(b[0], a[i], a[i + 1], eps);
            bottom = (bottom_open && !f.empty() && f.lo == 0.0) ? f : Interval{};
            bottom_open = !bottom.empty() && bottom.hi == 1.0;
        }
        for (std::size_t j = 0; j < q; ++j) {
            const Interval right_free = free_interval(a[i + 1], b[j], b[j + 1], eps);
            const Interval top_free = free_interval(b[j + 1], a[i], a[i + 1], eps);
            const Interval& l = left[j];

            Interval right;
            if (!right_free.empty()) {
                if (!bottom.empty()) right = right_free;
                else if (!l.empty()) right = {std::max(right_free.lo, l.lo), right_free.hi};
            }
            Interval top;
            if (!top_free.empty()) {
                if (!l.empty()) top = top_free;
                else if (!bottom.empty()) top = {std::max(top_free.lo, bottom.lo), top_free.hi};
            }
            left[j] = right;
            bottom = top;
        }
        // bottom now refers to the top edge of the last cell in this column.
        if (i + 1 == p) {
            const Interval& last_right = left[q - 1];
            return (!last_right.empty() && last_right.hi == 1.0) || (!bottom.empty() && bottom.hi == 1.0);
        }
    }
    return false;
}

double continuous_frechet(std::span<const Point> a, std::span<const Point> b, double tol) {
    require_nonempty(a, b);
    if (!(tol > 0.0)) throw Error(ErrorCode::BadRequest, "tolerance must be positive");
    double lo = std::max(distance(a.front(), b.front()), distance(a.back(), b.back()));
    double hi = discrete_frechet_distance(a, b);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (frechet_decision(a, b, mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

double default_frechet_tolerance(const Canvas& canvas) { return 1e-6 * canvas.diagonal(); }

}  // namespace lifelines

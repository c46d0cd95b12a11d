// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lifelines/curve.hpp"
#include "lifelines/geometry.hpp"

namespace lifelines {

inline constexpr std::size_t kMaxPageSize = 500;

/// Cached per-drawing summary; recomputable from the curve alone.
struct DrawingSummary {
    Point first;
    Point last;
    Box box;
    /// bounded-face count per winding value
    std::map<int, int> winding_histogram;
    int max_abs_winding = 0;
    double length = 0.0;

    friend bool operator==(const DrawingSummary&, const DrawingSummary&) = default;
};

/// Throws DegenerateOverlap when the curve cannot be arranged.
DrawingSummary summarize(const CanonicalCurve& curve);

struct GalleryRecord {
    std::string id;
    CanonicalCurve curve;
    std::string created_at;
    DrawingSummary summary;

    friend bool operator==(const GalleryRecord&, const GalleryRecord&) = default;
};

struct Neighbor {
    std::shared_ptr<const GalleryRecord> record;
    double distance = 0.0;
};

struct CorpusStats {
    std::size_t count = 0;
    /// drawings per maximum |winding|
    std::map<int, std::size_t> max_abs_winding_histogram;
    double mean_length = 0.0;
};

/// Lower bound on the discrete Fréchet distance between a query and a
/// record: endpoint distances, box separation and the distance from each
/// point of one curve to the other's bounding box.
double frechet_lower_bound(std::span<const Point> query, const Box& query_box, const GalleryRecord& record);

/// Zero-padded decimal id for the n-th record (1-based).
std::string format_record_id(std::size_t n);

/// Append-only drawing log with an in-memory index. One writer at a time,
/// any number of concurrent readers.
class GalleryStore {
public:
    /// Opens (creating if needed) the log at `path` and rebuilds the index
    /// from it. A torn final line left by a crash is dropped.
    explicit GalleryStore(std::filesystem::path path);
    ~GalleryStore();

    GalleryStore(const GalleryStore&) = delete;
    GalleryStore& operator=(const GalleryStore&) = delete;

    /// Appends the drawing; durable on disk before returning.
    std::shared_ptr<const GalleryRecord> add(const CanonicalCurve& curve,
                                             std::optional<std::string> created_at = std::nullopt);

    /// Appends many drawings with one sync; summaries are computed in parallel.
    std::vector<std::shared_ptr<const GalleryRecord>> add_batch(std::span<const CanonicalCurve> curves);

    std::shared_ptr<const GalleryRecord> get(const std::string& id) const;

    /// Records in id order. Throws BadRequest unless 1 <= limit <= 500.
    std::vector<std::shared_ptr<const GalleryRecord>> list(std::size_t offset, std::size_t limit) const;

    /// k nearest records by discrete Fréchet distance, ascending, ties by id.
    /// Parallel scan ordered by lower bound, pruning records whose bound
    /// exceeds the current k-th best.
    std::vector<Neighbor> nearest(const CanonicalCurve& query, std::size_t k) const;

    /// Serial reference: full distance to every record, then sort.
    std::vector<Neighbor> nearest_reference(const CanonicalCurve& query, std::size_t k) const;

    CorpusStats stats() const;

    std::size_t size() const;
    const std::filesystem::path& path() const { return path_; }

    /// Snapshot of every record, in id order.
    std::vector<std::shared_ptr<const GalleryRecord>> snapshot() const;

private:
    std::string serialize(const GalleryRecord& record) const;
    void append_lines(const std::string& lines);
    void load();

    std::filesystem::path path_;
    mutable std::shared_mutex index_mutex_;
    std::mutex writer_mutex_;
    std::vector<std::shared_ptr<const GalleryRecord>> records_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::size_t next_number_ = 1;
    int fd_ = -1;
};

}  // namespace lifelines

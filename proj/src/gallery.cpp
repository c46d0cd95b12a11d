// SPDX-License-Identifier: Apache-2.0
#include "lifelines/gallery.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "lifelines/arrangement.hpp"
#include "lifelines/drawing_io.hpp"
#include "lifelines/error.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/winding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lifelines {

namespace {

[[noreturn]] void storage_failure(const std::string& what) {
    throw Error(ErrorCode::StorageFailure, what + ": " + std::strerror(errno));
}

std::size_t parse_record_number(const std::string& id) {
    if (id.empty() || !std::all_of(id.begin(), id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::StorageFailure, "bad record id '" + id + "'");
    }
    return std::stoull(id);
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

DrawingSummary summarize(const CanonicalCurve& curve) {
    const Arrangement arr = build_arrangement(close_curve(curve));
    const WindingMap windings = compute_winding(arr);
    DrawingSummary s;
    s.first = curve.points().front();
    s.last = curve.points().back();
    s.box = bounding_box(curve.points());
    for (const Face& f : arr.faces()) {
        if (f.is_unbounded) continue;
        ++s.winding_histogram[windings[f.id]];
        s.max_abs_winding = std::max(s.max_abs_winding, std::abs(windings[f.id]));
    }
    s.length = polyline_length(curve.points());
    return s;
}

double frechet_lower_bound(std::span<const Point> query, const Box& query_box, const GalleryRecord& record) {
    const auto& pts = record.curve.points();
    const Box& box = record.summary.box;
    double lb = std::max(distance(query.front(), pts.front()), distance(query.back(), pts.back()));
    lb = std::max(lb, box_separation(query_box, box));
    // Every point of either curve is matched to some point inside the
    // other curve's box.
    for (const Point& p : query) lb = std::max(lb, point_box_distance(p, box));
    for (const Point& p : pts) lb = std::max(lb, point_box_distance(p, query_box));
    return lb;
}

std::string format_record_id(std::size_t n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06zu", n);
    return buf;
}

GalleryStore::GalleryStore(std::filesystem::path path) : path_(std::move(path)) {
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
    }
    load();
    fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) storage_failure("cannot open gallery log " + path_.string());
}

GalleryStore::~GalleryStore() {
    if (fd_ >= 0) ::close(fd_);
}

void GalleryStore::load() {
    std::ifstream in(path_, std::ios::binary);
    if (!in) {
        if (std::filesystem::exists(path_)) storage_failure("cannot read gallery log " + path_.string());
        return;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::vector<DrawingDocument> docs;
    std::size_t pos = 0;
    std::size_t good_end = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) break;  // torn tail
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) {
            good_end = pos;
            continue;
        }
        try {
            docs.push_back(parse_drawing(line));
        } catch (const Error&) {
            throw Error(ErrorCode::StorageFailure, "corrupt record in gallery log at byte " + std::to_string(good_end));
        }
        if (!docs.back().id || !docs.back().created_at) {
            throw Error(ErrorCode::StorageFailure, "gallery record without id or timestamp");
        }
        good_end = pos;
    }
    if (good_end < text.size()) {
        std::error_code ec;
        std::filesystem::resize_file(path_, good_end, ec);
        if (ec) throw Error(ErrorCode::StorageFailure, "cannot drop torn tail of gallery log: " + ec.message());
    }

    std::vector<std::shared_ptr<const GalleryRecord>> records(docs.size());
    const auto count = static_cast<std::ptrdiff_t>(docs.size());
    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const DrawingDocument& doc = docs[static_cast<std::size_t>(i)];
            auto rec = std::make_shared<GalleryRecord>();
            rec->id = *doc.id;
            rec->created_at = *doc.created_at;
            rec->curve = adopt_canonical(doc.points, doc.canvas);
            rec->summary = summarize(rec->curve);
            records[static_cast<std::size_t>(i)] = std::move(rec);
        } catch (const Error& e) {
#pragma omp critical(gallery_load_failure)
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) throw Error(ErrorCode::StorageFailure, "invalid record in gallery log: " + failure);

    for (auto& rec : records) {
        const std::size_t number = parse_record_number(rec->id);
        if (by_id_.count(rec->id)) throw Error(ErrorCode::StorageFailure, "duplicate record id " + rec->id);
        if (number < next_number_) throw Error(ErrorCode::StorageFailure, "record ids out of order at " + rec->id);
        next_number_ = number + 1;
        by_id_.emplace(rec->id, records_.size());
        records_.push_back(std::move(rec));
    }
}

std::string GalleryStore::serialize(const GalleryRecord& record) const {
    DrawingDocument doc{record.id, record.curve.canvas(), record.curve.points(), record.created_at};
    return to_json(doc).dump() + "\n";
}

void GalleryStore::append_lines(const std::string& lines) {
    const char* data = lines.data();
    std::size_t left = lines.size();
    while (left > 0) {
        const ssize_t n = ::write(fd_, data, left);
        if (n < 0) {
            if (errno == EINTR) continue;
            storage_failure("cannot append to gallery log");
        }
        data += n;
        left -= static_cast<std::size_t>(n);
    }
    if (::fdatasync(fd_) != 0) storage_failure("cannot sync gallery log");
}

std::shared_ptr<const GalleryRecord> GalleryStore::add(const CanonicalCurve& curve,
                                                       std::optional<std::string> created_at) {
    auto rec = std::make_shared<GalleryRecord>();
    rec->curve = curve;
    rec->summary = summarize(curve);
    rec->created_at = created_at ? *created_at : now_rfc3339();

    std::lock_guard writer(writer_mutex_);
    rec->id = format_record_id(next_number_);
    append_lines(serialize(*rec));
    std::unique_lock lock(index_mutex_);
    ++next_number_;
    by_id_.emplace(rec->id, records_.size());
    records_.push_back(rec);
    return rec;
}

std::vector<std::shared_ptr<const GalleryRecord>> GalleryStore::add_batch(std::span<const CanonicalCurve> curves) {
    std::vector<std::shared_ptr<GalleryRecord>> fresh(curves.size());
    const std::string stamp = now_rfc3339();
    const auto count = static_cast<std::ptrdiff_t>(curves.size());
    bool failed = false;
    ErrorCode code = ErrorCode::StorageFailure;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            auto rec = std::make_shared<GalleryRecord>();
            rec->curve = curves[static_cast<std::size_t>(i)];
            rec->summary = summarize(rec->curve);
            rec->created_at = stamp;
            fresh[static_cast<std::size_t>(i)] = std::move(rec);
        } catch (const Error& e) {
#pragma omp critical(gallery_batch_failure)
            {
                failed = true;
                code = e.code();
                failure = e.what();
            }
        }
    }
    if (failed) throw Error(code, failure);

    std::lock_guard writer(writer_mutex_);
    std::string lines;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        fresh[i]->id = format_record_id(next_number_ + i);
        lines += serialize(*fresh[i]);
    }
    append_lines(lines);

    std::vector<std::shared_ptr<const GalleryRecord>> out(fresh.begin(), fresh.end());
    std::unique_lock lock(index_mutex_);
    for (auto& rec : out) {
        by_id_.emplace(rec->id, records_.size());
        records_.push_back(rec);
    }
    next_number_ += fresh.size();
    return out;
}

std::shared_ptr<const GalleryRecord> GalleryStore::get(const std::string& id) const {
    std::shared_lock lock(index_mutex_);
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : records_[it->second];
}

std::vector<std::shared_ptr<const GalleryRecord>> GalleryStore::list(std::size_t offset, std::size_t limit) const {
    if (limit < 1 || limit > kMaxPageSize) {
        throw Error(ErrorCode::BadRequest, "limit must be between 1 and " + std::to_string(kMaxPageSize));
    }
    std::shared_lock lock(index_mutex_);
    if (offset >= records_.size()) return {};
    const std::size_t end = std::min(records_.size(), offset + limit);
    return {records_.begin() + static_cast<std::ptrdiff_t>(offset), records_.begin() + static_cast<std::ptrdiff_t>(end)};
}

std::vector<std::shared_ptr<const GalleryRecord>> GalleryStore::snapshot() const {
    std::shared_lock lock(index_mutex_);
    return records_;
}

std::size_t GalleryStore::size() const {
    std::shared_lock lock(index_mutex_);
    return records_.size();
}

std::vector<Neighbor> GalleryStore::nearest(const CanonicalCurve& query, std::size_t k) const {
    if (k < 1) throw Error(ErrorCode::BadRequest, "k must be at least 1");
    const auto records = snapshot();
    const std::size_t n = records.size();
    const auto& q = query.points();
    const Box query_box = bounding_box(q);

    std::vector<double> lower(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        lower[static_cast<std::size_t>(i)] = frechet_lower_bound(q, query_box, *records[static_cast<std::size_t>(i)]);
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return std::pair(lower[l], l) < std::pair(lower[r], r); });

    // (distance, record index); index order is id order.
    std::vector<std::pair<double, std::size_t>> best;
    const std::size_t chunk = std::max<std::size_t>(32, 4 * static_cast<std::size_t>(worker_count()));
    std::size_t pos = 0;
    while (pos < n) {
        const double threshold = best.size() == k ? best.back().first : std::numeric_limits<double>::infinity();
        if (lower[order[pos]] > threshold) break;
        const std::size_t end = std::min(n, pos + chunk);
        std::vector<std::optional<double>> found(end - pos);
        const auto width = static_cast<std::ptrdiff_t>(end - pos);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t c = 0; c < width; ++c) {
            const std::size_t idx = order[pos + static_cast<std::size_t>(c)];
            if (lower[idx] > threshold) continue;
            found[static_cast<std::size_t>(c)] = discrete_frechet_within(q, records[idx]->curve.points(), threshold);
        }
        for (std::size_t c = 0; c < found.size(); ++c) {
            if (found[c]) best.emplace_back(*found[c], order[pos + c]);
        }
        std::sort(best.begin(), best.end());
        if (best.size() > k) best.resize(k);
        pos = end;
    }

    std::vector<Neighbor> out;
    for (auto [d, idx] : best) out.push_back({records[idx], d});
    return out;
}

std::vector<Neighbor> GalleryStore::nearest_reference(const CanonicalCurve& query, std::size_t k) const {
    if (k < 1) throw Error(ErrorCode::BadRequest, "k must be at least 1");
    const auto records = snapshot();
    std::vector<std::pair<double, std::size_t>> all;
    all.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        all.emplace_back(discrete_frechet_distance(query.points(), records[i]->curve.points()), i);
    }
    std::sort(all.begin(), all.end());
    if (all.size() > k) all.resize(k);
    std::vector<Neighbor> out;
    for (auto [d, idx] : all) out.push_back({records[idx], d});
    return out;
}

CorpusStats GalleryStore::stats() const {
    const auto records = snapshot();
    CorpusStats s;
    s.count = records.size();
    double total = 0.0;
    for (const auto& rec : records) {
        ++s.max_abs_winding_histogram[rec->summary.max_abs_winding];
        total += rec->summary.length;
    }
    s.mean_length = records.empty() ? 0.0 : total / static_cast<double>(records.size());
    return s;
}

}  // namespace lifelines

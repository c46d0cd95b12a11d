// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "generators.hpp"
#include "lifelines/error.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/gallery.hpp"

using namespace lifelines;
namespace fs = std::filesystem;

namespace {

class TempLog {
public:
    TempLog() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("lifelines_gallery_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".log");
        fs::remove(path_);
    }
    ~TempLog() { fs::remove(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

CanonicalCurve horizontal(double y) { return canonicalize({{{0.0, y}, {1.0, y}}, Canvas{1.0, 4.0}}, 32); }

}  // namespace

TEST(Gallery, FirstIdsAreZeroPaddedAndIncreasing) {
    TempLog log;
    GalleryStore store(log.path());
    const auto a = store.add(horizontal(1.0));
    const auto b = store.add(horizontal(2.0));
    EXPECT_EQ(a->id, "000001");
    EXPECT_EQ(b->id, "000002");
    EXPECT_LT(a->id, b->id);
    EXPECT_EQ(store.get("000001")->curve, horizontal(1.0));
    EXPECT_EQ(store.get("000003"), nullptr);
}

TEST(Gallery, RoundTripsCurvesThroughTheLog) {
    TempLog log;
    testkit::Rng rng(61);
    std::vector<CanonicalCurve> curves;
    {
        GalleryStore store(log.path());
        for (int i = 0; i < 5; ++i) {
            curves.push_back(testkit::random_curve(rng));
            store.add(curves.back());
        }
    }
    GalleryStore reopened(log.path());
    ASSERT_EQ(reopened.size(), 5u);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        EXPECT_EQ(reopened.get(format_record_id(i + 1))->curve, curves[i]);
    }
}

TEST(Gallery, ListPages) {
    TempLog log;
    GalleryStore store(log.path());
    EXPECT_TRUE(store.list(0, 10).empty());
    for (double y : {1.0, 2.0, 3.0}) store.add(horizontal(y));
    const auto page = store.list(1, 1);
    ASSERT_EQ(page.size(), 1u);
    EXPECT_EQ(page[0]->id, "000002");
    EXPECT_TRUE(store.list(3, 10).empty());
    EXPECT_TRUE(store.list(99, 10).empty());
    EXPECT_EQ(store.list(0, 500).size(), 3u);
    EXPECT_THROW(store.list(0, 0), Error);
    EXPECT_THROW(store.list(0, 501), Error);
}

TEST(Gallery, NearestOrdersByDistanceThenId) {
    TempLog log;
    GalleryStore store(log.path());
    for (double y : {1.0, 2.0, 3.0}) store.add(horizontal(y));
    const auto hits = store.nearest(horizontal(0.0), 3);
    ASSERT_EQ(hits.size(), 3u);
    EXPECT_EQ(hits[0].distance, 1.0);
    EXPECT_EQ(hits[1].distance, 2.0);
    EXPECT_EQ(hits[2].distance, 3.0);
    EXPECT_EQ(hits[0].record->id, "000001");
}

TEST(Gallery, CopiesTieAtZeroInIdOrder) {
    TempLog log;
    GalleryStore store(log.path());
    testkit::Rng rng(62);
    const CanonicalCurve a = testkit::random_curve(rng);
    store.add(testkit::random_curve(rng));
    store.add(a);
    store.add(a);
    const auto hits = store.nearest(a, 2);
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_EQ(hits[0].distance, 0.0);
    EXPECT_EQ(hits[1].distance, 0.0);
    EXPECT_EQ(hits[0].record->id, "000002");
    EXPECT_EQ(hits[1].record->id, "000003");
}

TEST(Gallery, LowerBoundsNeverExceedDistance) {
    testkit::Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const CanonicalCurve q = testkit::random_curve(rng, 64);
        GalleryRecord rec;
        rec.curve = testkit::random_curve(rng, 64);
        rec.summary.box = bounding_box(rec.curve.points());
        const double d = discrete_frechet(q.points(), rec.curve.points()).distance;
        EXPECT_LE(frechet_lower_bound(q.points(), bounding_box(q.points()), rec), d);
        EXPECT_LE(box_separation(bounding_box(q.points()), rec.summary.box), d);
    }
}

TEST(Gallery, PrunedNearestMatchesReferenceScan) {
    TempLog log;
    GalleryStore store(log.path());
    testkit::Rng rng(64);
    std::vector<CanonicalCurve> curves;
    for (int i = 0; i < 150; ++i) curves.push_back(testkit::random_curve(rng, 64));
    store.add_batch(curves);
    for (int q = 0; q < 10; ++q) {
        const CanonicalCurve query = testkit::random_curve(rng, 64);
        for (std::size_t k : {1u, 5u, 10u, 200u}) {
            const auto fast = store.nearest(query, k);
            const auto slow = store.nearest_reference(query, k);
            ASSERT_EQ(fast.size(), slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) {
                EXPECT_EQ(fast[i].record->id, slow[i].record->id);
                EXPECT_EQ(fast[i].distance, slow[i].distance);
            }
        }
    }
}

TEST(Gallery, Stats) {
    TempLog log;
    GalleryStore store(log.path());
    CorpusStats empty = store.stats();
    EXPECT_EQ(empty.count, 0u);
    EXPECT_TRUE(empty.max_abs_winding_histogram.empty());

    const CanonicalCurve arc = canonicalize({{{0.0, 0.5}, {0.5, 0.8}, {1.0, 0.5}}, Canvas{}});
    store.add(arc);
    const CorpusStats one = store.stats();
    EXPECT_EQ(one.count, 1u);
    EXPECT_EQ(one.max_abs_winding_histogram, (std::map<int, std::size_t>{{1, 1}}));
    EXPECT_EQ(one.mean_length, polyline_length(arc.points()));

    testkit::Rng rng(65);
    for (int i = 0; i < 4; ++i) store.add(testkit::random_curve(rng));
    EXPECT_EQ(store.stats().count, 5u);
}

TEST(Gallery, ReloadRebuildsIdenticalIndex) {
    TempLog log;
    testkit::Rng rng(66);
    std::vector<std::shared_ptr<const GalleryRecord>> before;
    {
        GalleryStore store(log.path());
        std::vector<CanonicalCurve> curves;
        for (int i = 0; i < 20; ++i) curves.push_back(testkit::random_curve(rng));
        store.add_batch(curves);
        store.add(testkit::random_curve(rng));
        before = store.snapshot();
    }
    GalleryStore reopened(log.path());
    const auto after = reopened.snapshot();
    ASSERT_EQ(after.size(), before.size());
    for (std::size_t i = 0; i < after.size(); ++i) EXPECT_EQ(*after[i], *before[i]);
    EXPECT_EQ(reopened.add(horizontal(1.0))->id, "000022");
}

TEST(Gallery, TornTailIsDroppedOnReload) {
    TempLog log;
    {
        GalleryStore store(log.path());
        store.add(horizontal(1.0));
        store.add(horizontal(2.0));
    }
    const auto good_size = fs::file_size(log.path());
    {
        std::ofstream out(log.path(), std::ios::app);
        out << R"({"canvas":{"h":4.0,"w":1.0},"created_at":"2026-01-01T00:00:00Z","id":"000003","poi)";
    }
    GalleryStore reopened(log.path());
    EXPECT_EQ(reopened.size(), 2u);
    EXPECT_EQ(fs::file_size(log.path()), good_size);
    EXPECT_EQ(reopened.add(horizontal(3.0))->id, "000003");
}

TEST(Gallery, CorruptMiddleRecordIsAStorageFailure) {
    TempLog log;
    {
        std::ofstream out(log.path());
        out << "not json\n";
    }
    try {
        GalleryStore store(log.path());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::StorageFailure);
    }
}

TEST(Gallery, UnwritableLocationIsAStorageFailure) {
    try {
        GalleryStore store("/proc/lifelines-cannot-write/gallery.log");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::StorageFailure);
    }
}

TEST(Gallery, ConcurrentReadersDuringWrites) {
    TempLog log;
    GalleryStore store(log.path());
    testkit::Rng rng(67);
    std::vector<CanonicalCurve> curves;
    for (int i = 0; i < 40; ++i) curves.push_back(testkit::random_curve(rng, 64));
    std::thread writer([&] {
        for (const auto& c : curves) store.add(c);
    });
    std::size_t seen = 0;
    while (seen < curves.size()) {
        const auto snap = store.snapshot();
        EXPECT_GE(snap.size(), seen);
        for (std::size_t i = 0; i < snap.size(); ++i) EXPECT_EQ(snap[i]->id, format_record_id(i + 1));
        seen = snap.size();
        if (!snap.empty()) store.nearest(curves[0], 3);
    }
    writer.join();
    EXPECT_EQ(store.size(), curves.size());
}

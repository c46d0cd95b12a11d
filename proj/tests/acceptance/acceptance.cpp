// SPDX-License-Identifier: Apache-2.0
// Acceptance suites. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "generators.hpp"
#include "lifelines/arrangement.hpp"
#include "lifelines/drawing_io.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/gallery.hpp"
#include "lifelines/morph.hpp"
#include "lifelines/pipeline.hpp"
#include "lifelines/svg.hpp"
#include "lifelines/winding.hpp"
#include "oracles.hpp"

using namespace lifelines;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& suite) {
    Outcome out;
    const auto start = Clock::now();
    try {
        out = suite();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s %s (%.1fs) %s\n", out.pass ? "PASS" : "FAIL", name, secs, out.detail.c_str());
    std::fflush(stdout);
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

fs::path scratch_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("lifelines_accept_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Shared by the winding and Euler suites.
std::vector<CanonicalCurve> winding_corpus() {
    testkit::Rng rng(1001);
    std::vector<CanonicalCurve> curves;
    curves.reserve(1000);
    for (int i = 0; i < 1000; ++i) curves.push_back(testkit::random_curve(rng));
    return curves;
}

// Samples are checked against the snap-rounded chain the arrangement was
// built from, and, where a face leaves room for it, against the raw chain.
Outcome winding_law(const std::vector<CanonicalCurve>& corpus) {
    testkit::Rng sampler(1002);
    std::size_t faces = 0, samples = 0, raw_samples = 0, short_faces = 0, raw_short = 0;
    std::size_t bad_unbounded = 0, bad_edges = 0, bad_samples = 0, bad_raw = 0;
    const auto start = Clock::now();
    for (const CanonicalCurve& c : corpus) {
        const ClosedChain chain = close_curve(c);
        const Arrangement arr = build_arrangement(chain);
        const ClosedChain arranged = testkit::arranged_chain(arr);
        const WindingMap w = compute_winding(arr);
        if (w[arr.unbounded_face()] != 0) ++bad_unbounded;
        for (const HalfEdge& h : arr.half_edges()) {
            const int across = w[h.face] - w[arr.half_edges()[h.twin].face];
            if (across != h.curve_dir || (across != 1 && across != -1)) ++bad_edges;
        }
        for (const Face& f : arr.faces()) {
            if (f.is_unbounded) continue;
            ++faces;
            const auto pts = testkit::interior_samples(arr, f.id, 10, sampler, 0.01 * kGridStep);
            if (pts.size() < 10) ++short_faces;
            for (Point q : pts) {
                ++samples;
                if (testkit::winding_oracle(arranged, q) != w[f.id]) ++bad_samples;
            }
            const auto far = testkit::interior_samples(arr, f.id, 10, sampler, 8.0 * kGridStep);
            if (far.size() < 10) ++raw_short;
            for (Point q : far) {
                ++raw_samples;
                if (testkit::winding_oracle(chain, q) != w[f.id]) ++bad_raw;
            }
        }
    }
    const double secs = seconds_since(start);
    Outcome out;
    out.pass = bad_unbounded == 0 && bad_edges == 0 && bad_samples == 0 && bad_raw == 0 && short_faces == 0 &&
               secs < 60.0;
    out.detail = fmt("curves=%zu faces=%zu unbounded_violations=%zu edge_violations=%zu samples=%zu "
                     "oracle_mismatches=%zu faces_short_of_10_samples=%zu raw_chain_samples=%zu "
                     "raw_chain_mismatches=%zu faces_too_thin_for_raw_check=%zu elapsed=%.1fs limit=60s",
                     corpus.size(), faces, bad_unbounded, bad_edges, samples, bad_samples, short_faces, raw_samples,
                     bad_raw, raw_short, secs);
    return out;
}

Outcome euler(const std::vector<CanonicalCurve>& corpus) {
    std::size_t bad = 0;
    for (const CanonicalCurve& c : corpus) {
        const Arrangement arr = build_arrangement(close_curve(c));
        const long v = static_cast<long>(arr.vertices().size());
        const long e = static_cast<long>(arr.edge_count());
        const long f = static_cast<long>(arr.faces().size());
        if (v - e + f != 2) ++bad;
    }
    return {bad == 0, fmt("curves=%zu violations=%zu", corpus.size(), bad)};
}

Outcome frechet_oracle() {
    testkit::Rng rng(1003);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        const auto a = testkit::random_points(rng, 1 + rng() % 8);
        const auto b = testkit::random_points(rng, 1 + rng() % 8);
        if (discrete_frechet(a, b).distance != testkit::enumerate_couplings_frechet(a, b)) ++bad;
    }
    return {bad == 0, fmt("pairs=200 mismatches=%zu", bad)};
}

Outcome metric_suite() {
    testkit::Rng rng(1004);
    auto sized = [&] { return testkit::random_points(rng, 1 + rng() % 40); };

    std::size_t asym = 0, triangle = 0, dup = 0, cont = 0, nonmono = 0;
    double worst_triangle = 0.0;
    for (int i = 0; i < 500; ++i) {
        const auto a = sized(), b = sized(), c = sized();
        const double ab = discrete_frechet_distance(a, b);
        if (ab != discrete_frechet_distance(b, a)) ++asym;
        const double excess = discrete_frechet_distance(a, c) - ab - discrete_frechet_distance(b, c);
        worst_triangle = std::max(worst_triangle, excess);
        if (excess > 1e-9) ++triangle;
        // Repeating a vertex leaves the distance unchanged.
        auto a2 = a;
        const std::size_t k = rng() % a2.size();
        a2.insert(a2.begin() + static_cast<long>(k), a2[k]);
        if (discrete_frechet_distance(a2, b) != ab) ++dup;
    }
    for (int i = 0; i < 200; ++i) {
        const auto a = sized(), b = sized();
        const double d = discrete_frechet_distance(a, b);
        const double tol = default_frechet_tolerance(Canvas{});
        if (continuous_frechet(a, b, tol) > d + tol) ++cont;
        // 32 values spanning [0, 1.25 d]: false then true, switching at most once.
        int flips = 0;
        bool previous = frechet_decision(a, b, 0.0);
        for (int g = 1; g < 32; ++g) {
            const bool now = frechet_decision(a, b, 1.25 * d * g / 31.0);
            if (now != previous) flips += previous ? 2 : 1;
            previous = now;
        }
        if (flips > 1 || !frechet_decision(a, b, d)) ++nonmono;
    }
    const bool pass = asym == 0 && triangle == 0 && dup == 0 && cont == 0 && nonmono == 0;
    return {pass, fmt("asymmetric=%zu/500 triangle_violations=%zu/500 (worst excess %.3g, tol 1e-9) "
                      "duplication_changes=%zu/500 continuous_above_discrete=%zu/200 nonmonotone_decisions=%zu/200",
                      asym, triangle, worst_triangle, dup, cont, nonmono)};
}

Outcome morph_suite() {
    testkit::Rng rng(1005);
    std::size_t bad_ends = 0, bad_bound = 0, failed_frames = 0;
    double worst = -1.0;
    for (int i = 0; i < 100; ++i) {
        const CanonicalCurve a = testkit::random_curve(rng);
        const CanonicalCurve b = testkit::random_curve(rng);
        const Morph m = make_morph(a, b, 5);  // t = 0, .25, .5, .75, 1
        if (collapse_duplicates(m.frames.front().curve) != collapse_duplicates(a.points()) ||
            collapse_duplicates(m.frames.back().curve) != collapse_duplicates(b.points())) {
            ++bad_ends;
        }
        for (std::size_t k = 1; k < 4; ++k) {
            const MorphFrame& f = m.frames[k];
            if (f.error) ++failed_frames;
            const double excess = discrete_frechet_distance(a.points(), f.curve) - f.t * m.distance;
            worst = std::max(worst, excess);
            if (excess > 1e-9) ++bad_bound;
        }
    }
    return {bad_ends == 0 && bad_bound == 0,
            fmt("pairs=100 endpoint_mismatches=%zu bound_violations=%zu/300 (worst excess %.3g, tol 1e-9) "
                "uncolorable_frames=%zu",
                bad_ends, bad_bound, worst, failed_frames)};
}

bool same_neighbors(const std::vector<Neighbor>& x, const std::vector<Neighbor>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].record->id != y[i].record->id || x[i].distance != y[i].distance) return false;
    }
    return true;
}

std::vector<CanonicalCurve> synthetic_corpus(testkit::Rng& rng, std::size_t n) {
    std::vector<CanonicalCurve> curves;
    curves.reserve(n);
    for (std::size_t i = 0; i < n; ++i) curves.push_back(testkit::random_curve(rng));
    return curves;
}

Outcome gallery_correctness() {
    const fs::path dir = scratch_dir("knn");
    testkit::Rng rng(1006);
    std::size_t bad = 0;
    {
        GalleryStore store(dir / "gallery.log");
        const auto corpus = synthetic_corpus(rng, 1000);
        store.add_batch(corpus);
        for (int q = 0; q < 20; ++q) {
            const CanonicalCurve query = testkit::random_curve(rng);
            if (!same_neighbors(store.nearest(query, 10), store.nearest_reference(query, 10))) ++bad;
        }
    }
    fs::remove_all(dir);
    return {bad == 0, fmt("corpus=1000 k=10 queries=20 mismatches=%zu", bad)};
}

Outcome scale_target() {
    const fs::path dir = scratch_dir("scale");
    testkit::Rng rng(1007);
    Outcome out;
    {
        auto start = Clock::now();
        std::unique_ptr<GalleryStore> store = std::make_unique<GalleryStore>(dir / "gallery.log");
        for (int batch = 0; batch < 20; ++batch) store->add_batch(synthetic_corpus(rng, 1000));
        const double ingest = seconds_since(start);

        const CanonicalCurve query = testkit::random_curve(rng);
        start = Clock::now();
        const auto hits = store->nearest(query, 10);
        const double query_secs = seconds_since(start);

        const auto before = store->snapshot();
        store.reset();
        start = Clock::now();
        const GalleryStore reloaded(dir / "gallery.log");
        const double reload_secs = seconds_since(start);
        const auto after = reloaded.snapshot();
        bool same = before.size() == after.size();
        for (std::size_t i = 0; same && i < before.size(); ++i) same = *before[i] == *after[i];
        same = same && same_neighbors(hits, reloaded.nearest(query, 10));

        out.pass = before.size() == 20000 && hits.size() == 10 && query_secs < 5.0 && same;
        out.detail = fmt("records=%zu ingest=%.1fs query_k10=%.3fs (limit 5s) reload=%.1fs reload_identical=%s",
                         before.size(), ingest, query_secs, reload_secs, same ? "yes" : "no");
    }
    fs::remove_all(dir);
    return out;
}

Outcome determinism() {
    const fs::path dir = scratch_dir("determinism");
    testkit::Rng rng(1008);
    std::size_t cli_diff = 0, svg_diff = 0, cli_errors = 0;
    for (int i = 0; i < 50; ++i) {
        const RawStroke s = testkit::random_stroke(rng, 64 + rng() % 449);
        const fs::path in = dir / fmt("fixture_%02d.json", i);
        std::ofstream(in) << to_json(DrawingDocument{std::nullopt, s.canvas, s.points, std::nullopt}).dump() << "\n";

        std::string outputs[2];
        std::string exports[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path svg = dir / fmt("out_%02d_%d.svg", i, run);
            const fs::path json = dir / fmt("out_%02d_%d.json", i, run);
            const std::string cmd = fmt("'%s' color '%s' -o '%s' --json '%s'", LIFELINES_CLI_PATH, in.c_str(),
                                        svg.c_str(), json.c_str());
            if (std::system(cmd.c_str()) != 0) ++cli_errors;
            outputs[run] = slurp(svg);
            exports[run] = slurp(json);
        }
        if (outputs[0].empty() || outputs[0] != outputs[1] || exports[0] != exports[1]) ++cli_diff;

        const ColoredDrawing colored = color_stroke(s);
        if (render_svg(colored) != render_svg(color_stroke(s))) ++svg_diff;
    }
    fs::remove_all(dir);
    return {cli_diff == 0 && svg_diff == 0 && cli_errors == 0,
            fmt("fixtures=50 color_cli_differences=%zu color_cli_errors=%zu render_svg_differences=%zu", cli_diff,
                cli_errors, svg_diff)};
}

}  // namespace

int main() {
    const std::vector<CanonicalCurve> corpus = winding_corpus();
    report("winding_law", [&] { return winding_law(corpus); });
    report("euler", [&] { return euler(corpus); });
    report("frechet_oracle", frechet_oracle);
    report("frechet_metric", metric_suite);
    report("morph", morph_suite);
    report("gallery_knn", gallery_correctness);
    report("scale_20000", scale_target);
    report("determinism", determinism);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

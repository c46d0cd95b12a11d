// SPDX-License-Identifier: Apache-2.0
// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>
#include <memory>
#include <unistd.h>

#include "generators.hpp"
#include "lifelines/arrangement.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/gallery.hpp"
#include "lifelines/morph.hpp"

using namespace lifelines;
namespace fs = std::filesystem;

namespace {

std::vector<CanonicalCurve> corpus(std::size_t n, std::uint64_t seed) {
    testkit::Rng rng(seed);
    std::vector<CanonicalCurve> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(testkit::random_curve(rng));
    return out;
}

// One store per corpus size, shared by the nearest benchmarks.
GalleryStore& store_of(std::size_t n) {
    static std::map<std::size_t, std::unique_ptr<GalleryStore>> stores;
    auto& slot = stores[n];
    if (!slot) {
        const fs::path path = fs::temp_directory_path() /
                              ("lifelines_bench_" + std::to_string(::getpid()) + "_" + std::to_string(n) + ".log");
        fs::remove(path);
        slot = std::make_unique<GalleryStore>(path);
        slot->add_batch(corpus(n, 7));
        fs::remove(path);
    }
    return *slot;
}

void BM_NearestPruned(benchmark::State& state) {
    GalleryStore& store = store_of(static_cast<std::size_t>(state.range(0)));
    const auto queries = corpus(8, 11);
    std::size_t q = 0;
    for (auto _ : state) benchmark::DoNotOptimize(store.nearest(queries[q++ % queries.size()], 10));
}

void BM_NearestReference(benchmark::State& state) {
    GalleryStore& store = store_of(static_cast<std::size_t>(state.range(0)));
    const auto queries = corpus(8, 11);
    std::size_t q = 0;
    for (auto _ : state) benchmark::DoNotOptimize(store.nearest_reference(queries[q++ % queries.size()], 10));
}

void BM_MorphParallel(benchmark::State& state) {
    const auto pair = corpus(2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(make_morph(pair[0], pair[1], state.range(0)));
}

void BM_MorphSerial(benchmark::State& state) {
    const auto pair = corpus(2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(make_morph_serial(pair[0], pair[1], state.range(0)));
}

void BM_DiscreteFrechet(benchmark::State& state) {
    testkit::Rng rng(17);
    const auto a = testkit::random_points(rng, state.range(0));
    const auto b = testkit::random_points(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(discrete_frechet_distance(a, b));
    state.SetComplexityN(state.range(0));
}

void BM_BuildArrangement(benchmark::State& state) {
    const auto curves = corpus(16, 19);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(build_arrangement(close_curve(curves[i++ % curves.size()])));
}

}  // namespace

BENCHMARK(BM_NearestPruned)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestReference)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MorphParallel)->Arg(24)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MorphSerial)->Arg(24)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscreteFrechet)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_BuildArrangement)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

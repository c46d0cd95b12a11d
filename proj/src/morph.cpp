// SPDX-License-Identifier: Apache-2.0
#include "lifelines/morph.hpp"

#include "lifelines/arrangement.hpp"

namespace lifelines {

std::vector<Point> interpolate(std::span<const Point> a, std::span<const Point> b, const Coupling& coupling, double t) {
    std::vector<Point> out;
    out.reserve(coupling.size());
    for (const IndexPair& pair : coupling) {
        const Point& p = a[pair.i];
        const Point& q = b[pair.j];
        out.push_back({(1.0 - t) * p.x + t * q.x, (1.0 - t) * p.y + t * q.y});
    }
    return out;
}

namespace {

Morph prepare(const CanonicalCurve& a, const CanonicalCurve& b, std::size_t frames) {
    if (frames < 2) throw Error(ErrorCode::BadSampleCount, "a morph needs at least two frames");
    FrechetResult fr = discrete_frechet(a.points(), b.points());
    Morph morph;
    morph.distance = fr.distance;
    morph.coupling = std::move(fr.coupling);
    morph.frames.resize(frames);
    return morph;
}

void build_frame(const CanonicalCurve& a, const CanonicalCurve& b, Morph& morph, std::size_t k,
                 const Palette& palette) {
    MorphFrame& frame = morph.frames[k];
    frame.t = static_cast<double>(k) / static_cast<double>(morph.frames.size() - 1);
    frame.curve = interpolate(a.points(), b.points(), morph.coupling, frame.t);
    try {
        const Arrangement arr = build_arrangement(close_polyline(frame.curve, a.canvas()));
        frame.colored = color_faces(arr, compute_winding(arr), palette);
    } catch (const Error& e) {
        frame.error = e.code();
    }
}

}  // namespace

Morph make_morph(const CanonicalCurve& a, const CanonicalCurve& b, std::size_t frames, const Palette& palette) {
    Morph morph = prepare(a, b, frames);
    const auto count = static_cast<std::ptrdiff_t>(frames);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) build_frame(a, b, morph, static_cast<std::size_t>(k), palette);
    return morph;
}

Morph make_morph_serial(const CanonicalCurve& a, const CanonicalCurve& b, std::size_t frames, const Palette& palette) {
    Morph morph = prepare(a, b, frames);
    for (std::size_t k = 0; k < frames; ++k) build_frame(a, b, morph, k, palette);
    return morph;
}

}  // namespace lifelines

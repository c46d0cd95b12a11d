// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lifelines/curve.hpp"
#include "lifelines/error.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/winding.hpp"

namespace lifelines {

inline constexpr std::size_t kDefaultMorphFrames = 24;

struct MorphFrame {
    double t = 0.0;
    /// One point per coupling pair (duplicates kept).
    std::vector<Point> curve;
    /// Empty when the frame could not be arranged; see `error`.
    ColoredDrawing colored;
    std::optional<ErrorCode> error;
};

struct Morph {
    double distance = 0.0;  // discrete Fréchet distance between the endpoints
    Coupling coupling;
    std::vector<MorphFrame> frames;
};

/// Interpolates coupled points linearly; frame k sits at t = k / (frames - 1).
/// Frames are built in parallel; output order is by t. Throws
/// BadSampleCount when frames < 2.
Morph make_morph(const CanonicalCurve& a, const CanonicalCurve& b, std::size_t frames = kDefaultMorphFrames,
                 const Palette& palette = Palette::hue_wheel());

/// Serial reference of make_morph; identical output.
Morph make_morph_serial(const CanonicalCurve& a, const CanonicalCurve& b, std::size_t frames = kDefaultMorphFrames,
                        const Palette& palette = Palette::hue_wheel());

/// Points of a single interpolated frame.
std::vector<Point> interpolate(std::span<const Point> a, std::span<const Point> b, const Coupling& coupling, double t);

}  // namespace lifelines

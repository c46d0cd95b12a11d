// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lifelines/arrangement.hpp"
#include "lifelines/curve.hpp"

namespace lifelines {

/// Winding number per face, indexed by face id.
using WindingMap = std::vector<int>;

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    /// "#RRGGBB"
    std::string hex() const;
    static Rgb from_hex(const std::string& text);

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Palette {
    std::vector<Rgb> colors;
    int offset = 0;

    /// `count` colors evenly spaced around the hue circle at fixed
    /// saturation and lightness.
    static Palette hue_wheel(std::size_t count = 8, int offset = 0);

    /// Euclidean modulo: the result is always a valid index.
    const Rgb& color_for(int winding) const;
};

struct ColoredFace {
    std::size_t face = 0;
    std::vector<std::vector<Point>> rings;  // outer ring, then holes
    int winding = 0;
    Rgb color;

    friend bool operator==(const ColoredFace&, const ColoredFace&) = default;
};

/// A colored drawing: the bounded faces plus the stroke drawn on top.
struct ColoredDrawing {
    std::vector<ColoredFace> faces;
    std::vector<Point> curve;
    Canvas canvas;
    int palette_offset = 0;

    friend bool operator==(const ColoredDrawing&, const ColoredDrawing&) = default;
};

/// Signed crossing count of the ray from q towards +x against the chain.
/// Independent of any arrangement; throws PointOnCurve within one grid step.
int winding_at_point(const ClosedChain& chain, Point q);

/// Propagates windings outward-in from the unbounded face (winding 0).
WindingMap compute_winding(const Arrangement& arr);

ColoredDrawing color_faces(const Arrangement& arr, const WindingMap& windings, const Palette& palette);

/// Recolors with an absolute palette offset; windings are untouched.
ColoredDrawing recolor(const ColoredDrawing& colored, const Palette& palette, int new_offset);

}  // namespace lifelines

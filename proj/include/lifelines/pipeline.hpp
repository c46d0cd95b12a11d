// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lifelines/curve.hpp"
#include "lifelines/winding.hpp"

namespace lifelines {

/// close, arrange, wind and color a canonical curve.
ColoredDrawing color_curve(const CanonicalCurve& curve, const Palette& palette = Palette::hue_wheel());

/// canonicalize then color_curve.
ColoredDrawing color_stroke(const RawStroke& stroke, const Palette& palette = Palette::hue_wheel(),
                            std::size_t samples = kDefaultSampleCount);

}  // namespace lifelines

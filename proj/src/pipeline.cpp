// SPDX-License-Identifier: Apache-2.0
#include "lifelines/pipeline.hpp"

#include "lifelines/arrangement.hpp"

namespace lifelines {

ColoredDrawing color_curve(const CanonicalCurve& curve, const Palette& palette) {
    const Arrangement arr = build_arrangement(close_curve(curve));
    return color_faces(arr, compute_winding(arr), palette);
}

ColoredDrawing color_stroke(const RawStroke& stroke, const Palette& palette, std::size_t samples) {
    return color_curve(canonicalize(stroke, samples), palette);
}

}  // namespace lifelines

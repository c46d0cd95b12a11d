// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lifelines/winding.hpp"

namespace lifelines {

struct SvgStyle {
    int size = 512;  // output width in pixels; height follows the canvas aspect
    std::string background = "#FFFFFF";
    std::string stroke = "#1A1A1A";
    double stroke_width = 0.004;  // fraction of the canvas width
};

/// One even-odd filled path per bounded face, the stroke on top, clipped to
/// the canvas. Byte-identical for identical input.
std::string render_svg(const ColoredDrawing& drawing, const SvgStyle& style = {});

}  // namespace lifelines

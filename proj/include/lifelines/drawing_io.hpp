// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lifelines/curve.hpp"
#include "lifelines/morph.hpp"
#include "lifelines/winding.hpp"

namespace lifelines {

using Json = nlohmann::json;

/// Drawing interchange object: {id?, canvas: {w, h}, points: [[x, y], ...], created_at?}.
struct DrawingDocument {
    std::optional<std::string> id;
    Canvas canvas;
    std::vector<Point> points;
    std::optional<std::string> created_at;

    RawStroke stroke() const { return {points, canvas}; }
};

/// Throws BadRequest on a malformed document. A missing canvas means the unit canvas.
DrawingDocument parse_drawing(const Json& j);
DrawingDocument parse_drawing(const std::string& text);
Json to_json(const DrawingDocument& doc);

Json points_to_json(std::span<const Point> points);

/// {canvas, palette_offset, curve, faces: [{winding, color, rings}]}
Json to_json(const ColoredDrawing& drawing);

/// {distance, frames: [{t, drawing} | {t, error}]}
Json to_json(const Morph& morph);

/// Current UTC time as RFC 3339 with second precision.
std::string now_rfc3339();

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#include "lifelines/drawing_io.hpp"

#include <chrono>
#include <ctime>

#include "lifelines/error.hpp"

namespace lifelines {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::BadRequest, "malformed drawing: " + what);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) malformed(std::string(what) + " is not a number");
    return j.get<double>();
}

}  // namespace

DrawingDocument parse_drawing(const Json& j) {
    if (!j.is_object()) malformed("expected an object");
    DrawingDocument doc;
    if (auto it = j.find("id"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) malformed("id is not a string");
        doc.id = it->get<std::string>();
    }
    if (auto it = j.find("canvas"); it != j.end()) {
        if (!it->is_object() || !it->contains("w") || !it->contains("h")) malformed("canvas needs w and h");
        doc.canvas = {number((*it)["w"], "canvas.w"), number((*it)["h"], "canvas.h")};
    }
    auto pts = j.find("points");
    if (pts == j.end() || !pts->is_array()) malformed("points must be an array");
    doc.points.reserve(pts->size());
    for (const Json& p : *pts) {
        if (!p.is_array() || p.size() != 2) malformed("each point is [x, y]");
        doc.points.push_back({number(p[0], "x"), number(p[1], "y")});
    }
    if (auto it = j.find("created_at"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) malformed("created_at is not a string");
        doc.created_at = it->get<std::string>();
    }
    return doc;
}

DrawingDocument parse_drawing(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) malformed("not valid JSON");
    return parse_drawing(j);
}

Json points_to_json(std::span<const Point> points) {
    Json arr = Json::array();
    for (const Point& p : points) arr.push_back({p.x, p.y});
    return arr;
}

Json to_json(const DrawingDocument& doc) {
    Json j;
    if (doc.id) j["id"] = *doc.id;
    j["canvas"] = {{"w", doc.canvas.width}, {"h", doc.canvas.height}};
    j["points"] = points_to_json(doc.points);
    if (doc.created_at) j["created_at"] = *doc.created_at;
    return j;
}

Json to_json(const ColoredDrawing& drawing) {
    Json faces = Json::array();
    for (const ColoredFace& f : drawing.faces) {
        Json rings = Json::array();
        for (const auto& ring : f.rings) rings.push_back(points_to_json(ring));
        faces.push_back({{"winding", f.winding}, {"color", f.color.hex()}, {"rings", std::move(rings)}});
    }
    return {{"canvas", {{"w", drawing.canvas.width}, {"h", drawing.canvas.height}}},
            {"palette_offset", drawing.palette_offset},
            {"curve", points_to_json(drawing.curve)},
            {"faces", std::move(faces)}};
}

Json to_json(const Morph& morph) {
    Json frames = Json::array();
    for (const MorphFrame& f : morph.frames) {
        Json frame = {{"t", f.t}};
        if (f.error) {
            frame["error"] = std::string(error_name(*f.error));
            frame["curve"] = points_to_json(f.curve);
        } else {
            frame["drawing"] = to_json(f.colored);
        }
        frames.push_back(std::move(frame));
    }
    return {{"distance", morph.distance}, {"frames", std::move(frames)}};
}

std::string now_rfc3339() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lifelines/drawing_io.hpp"
#include "lifelines/error.hpp"
#include "lifelines/frechet.hpp"
#include "lifelines/gallery.hpp"
#include "lifelines/morph.hpp"
#include "lifelines/pipeline.hpp"
#include "lifelines/service.hpp"
#include "lifelines/svg.hpp"

namespace fs = std::filesystem;
using namespace lifelines;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::StorageFailure, "cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::StorageFailure, "cannot write " + path.string());
}

CanonicalCurve load_curve(const fs::path& path) {
    return canonicalize(parse_drawing(read_file(path)).stroke());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Winding-number coloring, Fréchet distance and morphing of freehand drawings"};
    app.require_subcommand(1);

    // color
    auto* color = app.add_subcommand("color", "Color a drawing by winding number and render it as SVG");
    std::string color_in, color_out, color_json;
    int color_offset = 0;
    int color_size = 512;
    color->add_option("input", color_in, "Drawing file")->required();
    color->add_option("-o,--output", color_out, "SVG output path")->required();
    color->add_option("--offset", color_offset, "Palette offset");
    color->add_option("--size", color_size, "Output width in pixels")->check(CLI::Range(16, 8192));
    color->add_option("--json", color_json, "Also write the colored-drawing export here");

    // frechet
    auto* frechet = app.add_subcommand("frechet", "Fréchet distance between two drawings");
    std::string fa, fb;
    bool continuous = false;
    double tol = 0.0;
    frechet->add_option("a", fa, "First drawing")->required();
    frechet->add_option("b", fb, "Second drawing")->required();
    frechet->add_flag("--continuous", continuous, "Also compute the continuous distance");
    frechet->add_option("--tol", tol, "Bisection tolerance (default 1e-6 of the canvas diagonal)");

    // morph
    auto* morph = app.add_subcommand("morph", "Morph one drawing into another");
    std::string ma, mb, mdir;
    std::size_t frames = kDefaultMorphFrames;
    morph->add_option("a", ma, "First drawing")->required();
    morph->add_option("b", mb, "Second drawing")->required();
    morph->add_option("--frames", frames, "Number of frames")->check(CLI::Range(2, 10000));
    morph->add_option("-o,--output", mdir, "Output directory")->required();

    // gallery
    auto* gallery = app.add_subcommand("gallery", "Work with a drawing gallery log");
    gallery->require_subcommand(1);
    std::string data = "gallery.log";
    gallery->add_option("--data", data, "Gallery log path");
    auto* gadd = gallery->add_subcommand("add", "Add drawings");
    std::vector<std::string> add_inputs;
    gadd->add_option("inputs", add_inputs, "Drawing files")->required();
    auto* glist = gallery->add_subcommand("list", "List drawings");
    std::size_t list_offset = 0, list_limit = 50;
    glist->add_option("--offset", list_offset);
    glist->add_option("--limit", list_limit)->check(CLI::Range(1, 500));
    auto* gnearest = gallery->add_subcommand("nearest", "Nearest drawings to a query drawing");
    std::string near_in;
    std::size_t near_k = 10;
    gnearest->add_option("input", near_in, "Query drawing")->required();
    gnearest->add_option("-k", near_k)->check(CLI::Range(1, 100000));
    auto* gstats = gallery->add_subcommand("stats", "Corpus statistics");

    // serve
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    std::string config_file, serve_data;
    int port = 0;
    std::vector<std::string> cors;
    serve_cmd->add_option("--config", config_file, "JSON config file");
    serve_cmd->add_option("--port", port, "Listen port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--data", serve_data, "Gallery log path");
    serve_cmd->add_option("--cors", cors, "Allowed CORS origin (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (color->parsed()) {
            const Palette palette = Palette::hue_wheel();
            const ColoredDrawing colored =
                recolor(color_stroke(parse_drawing(read_file(color_in)).stroke(), palette), palette, color_offset);
            SvgStyle style;
            style.size = color_size;
            write_file(color_out, render_svg(colored, style));
            if (!color_json.empty()) write_file(color_json, to_json(colored).dump(2) + "\n");
        } else if (frechet->parsed()) {
            const CanonicalCurve a = load_curve(fa);
            const CanonicalCurve b = load_curve(fb);
            Json out = {{"discrete", discrete_frechet_distance(a.points(), b.points())}};
            if (continuous) {
                const double t = tol > 0.0 ? tol : default_frechet_tolerance(a.canvas());
                out["continuous"] = continuous_frechet(a.points(), b.points(), t);
                out["tol"] = t;
            }
            std::cout << out.dump(2) << "\n";
        } else if (morph->parsed()) {
            const Morph m = make_morph(load_curve(ma), load_curve(mb), frames);
            fs::create_directories(mdir);
            for (std::size_t k = 0; k < m.frames.size(); ++k) {
                char name[32];
                std::snprintf(name, sizeof name, "frame_%03zu.svg", k);
                if (!m.frames[k].error) write_file(fs::path(mdir) / name, render_svg(m.frames[k].colored));
            }
            write_file(fs::path(mdir) / "morph.json", to_json(m).dump() + "\n");
            std::cout << Json{{"distance", m.distance}, {"frames", m.frames.size()}}.dump() << "\n";
        } else if (gallery->parsed()) {
            GalleryStore store(data);
            if (gadd->parsed()) {
                for (const auto& in : add_inputs) {
                    const DrawingDocument doc = parse_drawing(read_file(in));
                    const auto rec = store.add(canonicalize(doc.stroke()), doc.created_at);
                    std::cout << rec->id << "\n";
                }
            } else if (glist->parsed()) {
                for (const auto& rec : store.list(list_offset, list_limit)) {
                    std::cout << rec->id << " " << rec->created_at << " max|w|=" << rec->summary.max_abs_winding
                              << "\n";
                }
            } else if (gnearest->parsed()) {
                for (const Neighbor& n : store.nearest(load_curve(near_in), near_k)) {
                    std::cout << n.record->id << " " << n.distance << "\n";
                }
            } else if (gstats->parsed()) {
                const CorpusStats s = store.stats();
                Json histogram = Json::object();
                for (auto [w, n] : s.max_abs_winding_histogram) histogram[std::to_string(w)] = n;
                std::cout << Json{{"count", s.count},
                                  {"max_abs_winding_histogram", histogram},
                                  {"mean_length", s.mean_length}}
                                 .dump(2)
                          << "\n";
            }
        } else if (serve_cmd->parsed()) {
            ServiceConfig config = config_file.empty() ? ServiceConfig{} : load_service_config(config_file);
            apply_environment(config);
            if (port != 0) config.port = port;
            if (!serve_data.empty()) config.data = serve_data;
            if (!cors.empty()) config.cors_allow = cors;
            std::cerr << "listening on " << config.host << ":" << config.port << ", gallery " << config.data << "\n";
            serve(config);
        }
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return is_validation_error(e.code()) ? kExitInvalid : kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

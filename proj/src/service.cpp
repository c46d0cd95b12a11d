// SPDX-License-Identifier: Apache-2.0
#include "lifelines/service.hpp"

#include <pthread.h>
#include <signal.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "lifelines/error.hpp"
#include "lifelines/morph.hpp"
#include "lifelines/pipeline.hpp"
#include "lifelines/svg.hpp"

namespace lifelines {

namespace {

constexpr std::size_t kDefaultPageSize = 50;
constexpr std::size_t kMaxMorphFrames = 240;
constexpr std::size_t kMaxNeighbors = 100;

using Query = std::vector<std::pair<std::string, std::string>>;

std::optional<std::string> param(const Query& query, const std::string& key) {
    for (const auto& [k, v] : query) {
        if (k == key) return v;
    }
    return std::nullopt;
}

long long parse_integer(const std::string& text, const std::string& key) {
    long long value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw Error(ErrorCode::BadRequest, key + " must be an integer");
    return value;
}

long long integer_param(const Query& query, const std::string& key, long long fallback) {
    const auto v = param(query, key);
    return v ? parse_integer(*v, key) : fallback;
}

std::string required_param(const Query& query, const std::string& key) {
    auto v = param(query, key);
    if (!v) throw Error(ErrorCode::BadRequest, "missing query parameter " + key);
    return *v;
}

HttpResponse json_response(int status, const Json& body) { return {status, "application/json", body.dump()}; }

HttpResponse error_response(const Error& e) {
    int status = 500;
    if (e.code() == ErrorCode::NotFound) status = 404;
    else if (e.code() == ErrorCode::BadRequest) status = 400;
    else if (is_validation_error(e.code())) status = 422;
    return json_response(status, {{"error", std::string(e.name())}, {"message", e.what()}});
}

Json record_json(const GalleryRecord& rec) {
    return to_json(DrawingDocument{rec.id, rec.curve.canvas(), rec.curve.points(), rec.created_at});
}

std::shared_ptr<const GalleryRecord> lookup(const GalleryStore& store, const std::string& id) {
    auto rec = store.get(id);
    if (!rec) throw Error(ErrorCode::NotFound, "no drawing with id " + id);
    return rec;
}

Json stats_json(const CorpusStats& s) {
    Json histogram = Json::object();
    for (auto [w, n] : s.max_abs_winding_histogram) histogram[std::to_string(w)] = n;
    return {{"count", s.count}, {"max_abs_winding_histogram", histogram}, {"mean_length", s.mean_length}};
}

}  // namespace

void ServiceConfig::validate() const {
    if (port < 1 || port > 65535) throw Error(ErrorCode::BadRequest, "port must be in [1, 65535]");
    if (palette.colors.size() < 2) throw Error(ErrorCode::BadRequest, "palette needs at least two colors");
}

ServiceConfig load_service_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::StorageFailure, "cannot read config " + file.string());
    const Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::BadRequest, "config is not a JSON object");
    ServiceConfig config;
    try {
        if (j.contains("port")) config.port = j["port"].get<int>();
        if (j.contains("host")) config.host = j["host"].get<std::string>();
        if (j.contains("data")) config.data = j["data"].get<std::string>();
        if (j.contains("palette")) {
            config.palette.colors.clear();
            for (const auto& c : j["palette"]) config.palette.colors.push_back(Rgb::from_hex(c.get<std::string>()));
        }
        if (j.contains("cors_allow")) config.cors_allow = j["cors_allow"].get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::BadRequest, std::string("bad config: ") + e.what());
    }
    return config;
}

void apply_environment(ServiceConfig& config) {
    if (const char* port = std::getenv("LIFELINES_PORT")) {
        config.port = static_cast<int>(parse_integer(port, "LIFELINES_PORT"));
    }
    if (const char* data = std::getenv("LIFELINES_DATA")) config.data = data;
}

struct Service::Server {
    httplib::Server http;
    int port = -1;
};

Service::Service(ServiceConfig config)
    : config_(std::move(config)),
      store_(std::make_unique<GalleryStore>(config_.data)),
      server_(std::make_unique<Server>()) {
    if (config_.palette.colors.size() < 2) {
        throw Error(ErrorCode::BadRequest, "palette needs at least two colors");
    }

    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
        Query query(req.params.begin(), req.params.end());
        HttpResponse out = handle(req.method, req.path, query, req.body);
        res.status = out.status;
        if (!out.body.empty()) res.set_content(out.body, out.content_type);
        if (req.has_header("Origin")) {
            const std::string origin = req.get_header_value("Origin");
            const auto& allow = config_.cors_allow;
            if (std::find(allow.begin(), allow.end(), "*") != allow.end() ||
                std::find(allow.begin(), allow.end(), origin) != allow.end()) {
                res.set_header("Access-Control-Allow-Origin", origin);
                res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
                res.set_header("Access-Control-Allow-Headers", "Content-Type");
                res.set_header("Vary", "Origin");
            }
        }
    };
    // The library default sets SO_REUSEPORT, which lets a second instance share the port silently.
    server_->http.set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    server_->http.Get(".*", dispatch);
    server_->http.Post(".*", dispatch);
    server_->http.Options(".*", dispatch);
}

Service::~Service() { stop(); }

HttpResponse Service::handle(const std::string& method, const std::string& path, const Query& query,
                             const std::string& body) const {
    try {
        if (method == "OPTIONS") return {204, "text/plain", ""};

        if (path == "/drawings") {
            if (method == "POST") {
                const DrawingDocument doc = parse_drawing(body);
                const CanonicalCurve curve = canonicalize(doc.stroke());
                const ColoredDrawing colored = color_curve(curve, config_.palette);
                const auto rec = store_->add(curve, doc.created_at);
                return json_response(201, {{"id", rec->id}, {"record", record_json(*rec)}, {"colored", to_json(colored)}});
            }
            if (method != "GET") return json_response(405, {{"error", "MethodNotAllowed"}});
            const long long offset = integer_param(query, "offset", 0);
            const long long limit = integer_param(query, "limit", kDefaultPageSize);
            if (offset < 0 || limit < 1 || limit > static_cast<long long>(kMaxPageSize)) {
                throw Error(ErrorCode::BadRequest, "need offset >= 0 and 1 <= limit <= 500");
            }
            Json records = Json::array();
            for (const auto& rec : store_->list(static_cast<std::size_t>(offset), static_cast<std::size_t>(limit))) {
                records.push_back(record_json(*rec));
            }
            return json_response(200, {{"offset", offset},
                                       {"limit", limit},
                                       {"total", store_->size()},
                                       {"records", std::move(records)}});
        }

        if (method != "GET") return json_response(405, {{"error", "MethodNotAllowed"}});

        const std::string prefix = "/drawings/";
        if (path.rfind(prefix, 0) == 0 && path.size() > prefix.size()) {
            std::string id = path.substr(prefix.size());
            const bool svg = id.size() > 4 && id.ends_with(".svg");
            if (svg) id.resize(id.size() - 4);
            const auto rec = lookup(*store_, id);
            const int offset = static_cast<int>(integer_param(query, "offset", config_.palette.offset));
            const ColoredDrawing colored = recolor(color_curve(rec->curve, config_.palette), config_.palette, offset);
            if (svg) {
                SvgStyle style;
                style.size = static_cast<int>(std::clamp<long long>(integer_param(query, "size", 256), 16, 4096));
                return {200, "image/svg+xml", render_svg(colored, style)};
            }
            return json_response(200, {{"record", record_json(*rec)}, {"colored", to_json(colored)}});
        }

        if (path == "/morph") {
            const auto a = lookup(*store_, required_param(query, "a"));
            const auto b = lookup(*store_, required_param(query, "b"));
            const long long frames = integer_param(query, "frames", kDefaultMorphFrames);
            if (frames < 2) throw Error(ErrorCode::BadSampleCount, "a morph needs at least two frames");
            if (frames > static_cast<long long>(kMaxMorphFrames)) {
                throw Error(ErrorCode::BadRequest, "at most " + std::to_string(kMaxMorphFrames) + " frames");
            }
            Json out = to_json(make_morph(a->curve, b->curve, static_cast<std::size_t>(frames), config_.palette));
            out["a"] = a->id;
            out["b"] = b->id;
            return json_response(200, out);
        }

        if (path == "/nearest") {
            const auto rec = lookup(*store_, required_param(query, "id"));
            const long long k = integer_param(query, "k", 10);
            if (k < 1 || k > static_cast<long long>(kMaxNeighbors)) {
                throw Error(ErrorCode::BadRequest, "need 1 <= k <= " + std::to_string(kMaxNeighbors));
            }
            // The query drawing itself is always at distance 0; leave it out.
            Json neighbors = Json::array();
            for (const Neighbor& n : store_->nearest(rec->curve, static_cast<std::size_t>(k) + 1)) {
                if (n.record->id == rec->id || neighbors.size() == static_cast<std::size_t>(k)) continue;
                neighbors.push_back({{"id", n.record->id}, {"distance", n.distance}});
            }
            return json_response(200, {{"id", rec->id}, {"neighbors", std::move(neighbors)}});
        }

        if (path == "/stats") return json_response(200, stats_json(store_->stats()));

        return json_response(404, {{"error", "NotFound"}, {"message", "no route " + path}});
    } catch (const Error& e) {
        return error_response(e);
    } catch (const std::exception& e) {
        return json_response(500, {{"error", "Internal"}, {"message", e.what()}});
    }
}

int Service::bind() {
    const int port = config_.port == 0 ? server_->http.bind_to_any_port(config_.host)
                                       : (server_->http.bind_to_port(config_.host, config_.port) ? config_.port : -1);
    if (port < 0) {
        throw Error(ErrorCode::BindFailure, "cannot listen on " + config_.host + ":" + std::to_string(config_.port));
    }
    server_->port = port;
    return port;
}

void Service::run() { server_->http.listen_after_bind(); }

void Service::stop() {
    if (server_) server_->http.stop();
}

void serve(const ServiceConfig& config) {
    config.validate();

    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    Service service(config);
    service.bind();
    std::atomic<bool> signalled{false};
    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        signalled = true;
        service.stop();
    });
    service.run();
    // run() also returns if the listener fails; wake the waiter then.
    if (!signalled) pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
}

}  // namespace lifelines

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lifelines/drawing_io.hpp"
#include "lifelines/gallery.hpp"
#include "lifelines/winding.hpp"

namespace lifelines {

struct ServiceConfig {
    int port = 8080;
    std::string host = "0.0.0.0";
    std::filesystem::path data = "gallery.log";
    Palette palette = Palette::hue_wheel();
    /// Origins allowed by CORS; "*" allows any.
    std::vector<std::string> cors_allow;

    /// Throws BadRequest when the port is outside [1, 65535].
    void validate() const;
};

/// Reads {port, host, data, palette: ["#RRGGBB", ...], cors_allow: [...]};
/// absent keys keep their defaults.
ServiceConfig load_service_config(const std::filesystem::path& file);

/// Applies LIFELINES_PORT and LIFELINES_DATA when set.
void apply_environment(ServiceConfig& config);

struct HttpResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// HTTP front end over a gallery store. Request handling is exposed through
/// handle() so the routing can be exercised without sockets.
class Service {
public:
    explicit Service(ServiceConfig config);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Dispatches one request. `query` holds decoded query parameters.
    HttpResponse handle(const std::string& method, const std::string& path,
                        const std::vector<std::pair<std::string, std::string>>& query,
                        const std::string& body) const;

    /// Binds the configured port (0 picks a free one) and returns it.
    /// Throws BindFailure.
    int bind();

    /// Serves until stop(); call bind() first.
    void run();

    /// Safe from any thread; in-flight requests complete before run() returns.
    void stop();

    GalleryStore& store() { return *store_; }
    const ServiceConfig& config() const { return config_; }

private:
    struct Server;

    ServiceConfig config_;
    std::unique_ptr<GalleryStore> store_;
    std::unique_ptr<Server> server_;
};

/// bind + run with SIGINT/SIGTERM triggering a graceful stop.
void serve(const ServiceConfig& config);

}  // namespace lifelines

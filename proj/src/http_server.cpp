#include <httplib.h>

#include "coocnet/server.hpp"

namespace coocnet {

struct HttpServer::Impl {
    ApiService& api;
    std::string cors;
    httplib::Server server;

    Impl(ApiService& a, std::string origin) : api(a), cors(std::move(origin)) {}

    static std::optional<std::string> param(const httplib::Request& req, const char* name) {
        if (!req.has_param(name)) return std::nullopt;
        return req.get_param_value(name);
    }

    static void reply(httplib::Response& res, const ApiResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    }

    void install() {
        // httplib's default also sets SO_REUSEPORT, which lets a second
        // server share an occupied port instead of failing to bind.
        server.set_socket_options([](socket_t sock) {
            int yes = 1;
            setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
        });
        server.set_default_headers({{"Access-Control-Allow-Origin", cors}});
        server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
            res.status = 204;
        });
        server.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) { reply(res, api.health()); });
        server.Get("/api/suggest", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, api.suggest(param(req, "q"), param(req, "k")));
        });
        server.Get(R"(/api/graph/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, api.graph(req.matches[1].str(), param(req, "semantic_type"), param(req, "mode")));
        });
        server.Get(R"(/api/edge/([^/]+)/([^/]+)/publications)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       reply(res, api.edge_publications(req.matches[1].str(), req.matches[2].str()));
                   });
        server.Post("/api/feedback", [this](const httplib::Request& req, httplib::Response& res) {
            reply(res, api.feedback(req.body));
        });
        server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
            if (res.body.empty()) res.set_content(R"({"error":"not found"})", "application/json");
        });
    }
};

HttpServer::HttpServer(ApiService& api, std::string cors_allowed_origin)
    : impl_(std::make_unique<Impl>(api, std::move(cors_allowed_origin))) {
    impl_->install();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace coocnet

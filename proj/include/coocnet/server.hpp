#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coocnet/query.hpp"
#include "coocnet/store.hpp"
#include "coocnet/treeviz.hpp"

namespace coocnet {

/// Disease or Syndrome; the filter applied when a graph request names none.
inline constexpr const char* kDefaultSemanticType = "T047";
/// Passing this as semantic_type disables the filter.
inline constexpr const char* kAnySemanticType = "any";

inline constexpr std::size_t kDefaultSuggestions = 10;
inline constexpr std::size_t kMaxSuggestions = 50;
inline constexpr std::size_t kMaxFeedbackChars = 4096;

struct ApiConfig {
    std::string bind_address = "127.0.0.1:8080";
    std::filesystem::path index_dir;
    std::string cors_allowed_origin = "*";
    std::filesystem::path feedback_log = "feedback.log";
};

struct ApiResponse {
    int status = 200;
    std::string body;
};

/// Serialized forms shared by the HTTP layer and the CLI.
std::string suggestions_json(const std::vector<Suggestion>& suggestions);
std::string tree_json(const ResultTree& tree, std::string_view mode, const std::optional<std::string>& semantic_type);
std::string publications_json(const ConceptId& a, const ConceptId& b, const PublicationList& list);

/// Appends one JSON line per submission. Writes are serialized.
class FeedbackLog {
public:
    using Clock = std::function<std::string()>;

    explicit FeedbackLog(std::filesystem::path path, Clock clock = {});
    void append(std::string_view text, std::string_view context_url);
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    Clock clock_;
    std::mutex mutex_;
};

/// UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Endpoint logic without sockets. Every method is safe to call
/// concurrently; only feedback() has side effects.
class ApiService {
public:
    ApiService(std::shared_ptr<const IndexBundle> bundle, std::shared_ptr<FeedbackLog> feedback);

    ApiResponse health() const;
    ApiResponse suggest(const std::optional<std::string>& q, const std::optional<std::string>& k) const;
    ApiResponse graph(const std::string& concept_id, const std::optional<std::string>& semantic_type,
                      const std::optional<std::string>& mode) const;
    ApiResponse edge_publications(const std::string& a, const std::string& b) const;
    ApiResponse feedback(std::string_view body);

    const QueryEngine& engine() const noexcept { return engine_; }

private:
    std::shared_ptr<const IndexBundle> bundle_;
    QueryEngine engine_;
    std::shared_ptr<FeedbackLog> feedback_;
};

/// host:port, e.g. "127.0.0.1:8080" or "0.0.0.0:0".
std::pair<std::string, int> parse_bind_address(const std::string& address);

/// HTTP front end over ApiService.
class HttpServer {
public:
    HttpServer(ApiService& api, std::string cors_allowed_origin);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace coocnet

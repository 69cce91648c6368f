#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "coocnet/error.hpp"
#include "coocnet/server.hpp"
#include "coocnet/text.hpp"

namespace coocnet {

using ojson = nlohmann::ordered_json;

namespace {

ApiResponse error_response(int status, const std::string& message) {
    ojson j;
    j["error"] = message;
    return {status, j.dump()};
}

ojson node_json(const TreeNode& node) {
    ojson j;
    j["kind"] = to_string(node.kind);
    j["label"] = node.label;
    j["id"] = node.id;
    j["weight"] = node.weight;
    j["collapsed"] = node.collapsed;
    j["color"] = node.color ? ojson(to_string(*node.color)) : ojson(nullptr);
    ojson children = ojson::array();
    for (const auto& c : node.children) children.push_back(node_json(c));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

std::string suggestions_json(const std::vector<Suggestion>& suggestions) {
    ojson arr = ojson::array();
    for (const auto& s : suggestions) {
        ojson j;
        j["concept_id"] = s.concept_id.value;
        j["display"] = s.display;
        j["distance"] = s.distance;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::string tree_json(const ResultTree& tree, std::string_view mode, const std::optional<std::string>& semantic_type) {
    ojson j;
    j["mode"] = mode;
    j["semantic_type"] = semantic_type ? ojson(*semantic_type) : ojson(nullptr);
    j["leaf_count"] = collect_leaves(tree.root).size();
    j["tree"] = node_json(tree.root);
    return j.dump();
}

std::string publications_json(const ConceptId& a, const ConceptId& b, const PublicationList& list) {
    ojson j;
    j["a"] = a.value;
    j["b"] = b.value;
    j["total"] = list.total;
    ojson items = ojson::array();
    for (const auto& item : list.items) {
        ojson i;
        i["doc_id"] = item.doc_id;
        i["title"] = item.title;
        i["year"] = item.year;
        i["pub_date"] = item.pub_date;
        i["url"] = item.url ? ojson(*item.url) : ojson(nullptr);
        i["source_kind"] = to_string(item.source_kind);
        items.push_back(std::move(i));
    }
    j["items"] = std::move(items);
    ojson hist = ojson::object();
    for (const auto& [decade, count] : list.decade_histogram) hist[std::to_string(decade)] = count;
    j["decade_histogram"] = std::move(hist);
    return j.dump();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

FeedbackLog::FeedbackLog(std::filesystem::path path, Clock clock)
    : path_(std::move(path)), clock_(clock ? std::move(clock) : Clock(utc_timestamp)) {}

void FeedbackLog::append(std::string_view text, std::string_view context_url) {
    ojson j;
    j["timestamp"] = clock_();
    j["text"] = text;
    j["context_url"] = context_url;
    const std::string line = j.dump() + "\n";

    std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw StoreError(StoreError::Kind::IoFailure, path_.string());
    out << line;
    out.flush();
    if (!out) throw StoreError(StoreError::Kind::IoFailure, path_.string());
}

ApiService::ApiService(std::shared_ptr<const IndexBundle> bundle, std::shared_ptr<FeedbackLog> feedback)
    : bundle_(bundle), engine_(std::move(bundle)), feedback_(std::move(feedback)) {}

ApiResponse ApiService::health() const {
    const BuildStats& s = bundle_->stats;
    ojson j;
    j["status"] = "ok";
    j["format_version"] = bundle_->format_version;
    j["dictionary_checksum"] = bundle_->dictionary_checksum();
    ojson stats;
    stats["documents_processed"] = s.documents_processed;
    stats["documents_skipped"] = s.documents_skipped;
    stats["matched_spans"] = s.matched_spans;
    stats["distinct_edges"] = s.distinct_edges;
    j["build_stats"] = std::move(stats);
    return {200, j.dump()};
}

ApiResponse ApiService::suggest(const std::optional<std::string>& q, const std::optional<std::string>& k) const {
    if (!q || normalize(*q).empty()) return error_response(400, "query parameter q must be nonempty");
    std::size_t limit = kDefaultSuggestions;
    if (k && !k->empty()) {
        auto [ptr, ec] = std::from_chars(k->data(), k->data() + k->size(), limit);
        if (ec != std::errc{} || ptr != k->data() + k->size() || limit < 1) {
            return error_response(400, "k must be a positive integer");
        }
        limit = std::min(limit, kMaxSuggestions);
    }
    return {200, suggestions_json(engine_.suggest(*q, limit))};
}

ApiResponse ApiService::graph(const std::string& concept_id, const std::optional<std::string>& semantic_type,
                              const std::optional<std::string>& mode) const {
    const std::string m = mode && !mode->empty() ? *mode : "hierarchical";
    if (m != "hierarchical" && m != "flat") return error_response(400, "mode must be hierarchical or flat");

    std::optional<std::string> filter = kDefaultSemanticType;
    if (semantic_type) {
        if (*semantic_type == kAnySemanticType) filter.reset();
        else if (!semantic_type->empty()) filter = *semantic_type;
    }

    const ConceptId id(concept_id);
    if (!engine_.dictionary().contains(id)) return error_response(404, "unknown concept " + concept_id);
    const auto entries = engine_.neighbors(id, filter);
    const ResultTree tree = m == "flat" ? flat_view(id, entries, engine_.dictionary())
                                        : build_hierarchy(id, entries, engine_.dictionary());
    return {200, tree_json(tree, m, filter)};
}

ApiResponse ApiService::edge_publications(const std::string& a, const std::string& b) const {
    try {
        const ConceptId ida(a), idb(b);
        return {200, publications_json(ida, idb, engine_.edge_publications(ida, idb))};
    } catch (const UnknownConcept& e) {
        return error_response(404, e.what());
    } catch (const UnknownEdge& e) {
        return error_response(404, e.what());
    }
}

ApiResponse ApiService::feedback(std::string_view body) {
    ojson j;
    try {
        j = ojson::parse(body);
    } catch (const nlohmann::json::exception&) {
        return error_response(400, "body must be a JSON object");
    }
    if (!j.is_object()) return error_response(400, "body must be a JSON object");
    auto text = j.find("text");
    if (text == j.end() || !text->is_string() || text->get_ref<const std::string&>().empty()) {
        return error_response(400, "text must be nonempty");
    }
    if (utf8_length(text->get_ref<const std::string&>()) > kMaxFeedbackChars) {
        return error_response(400, "text exceeds 4096 characters");
    }
    std::string context;
    if (auto c = j.find("context_url"); c != j.end() && c->is_string()) context = c->get<std::string>();
    if (!feedback_) return error_response(503, "feedback is disabled");
    try {
        feedback_->append(text->get_ref<const std::string&>(), context);
    } catch (const Error& e) {
        return error_response(500, e.what());
    }
    return {202, R"({"status":"accepted"})"};
}

std::pair<std::string, int> parse_bind_address(const std::string& address) {
    const auto colon = address.rfind(':');
    if (colon == std::string::npos || colon == 0) throw ConfigError("bind address must be host:port");
    int port = -1;
    const char* first = address.data() + colon + 1;
    const char* last = address.data() + address.size();
    auto [ptr, ec] = std::from_chars(first, last, port);
    if (ec != std::errc{} || ptr != last || port < 0 || port > 65535) {
        throw ConfigError("bad port in bind address '" + address + "'");
    }
    return {address.substr(0, colon), port};
}

}  // namespace coocnet

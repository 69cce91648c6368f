#include "coocnet/extract.hpp"

#include <charconv>

#include <json.hpp>

#include "coocnet/error.hpp"
#include "coocnet/text.hpp"

namespace coocnet {

using nlohmann::json;

std::string_view to_string(SourceKind kind) {
    return kind == SourceKind::Research ? "research" : "encyclopedia";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) {
    if (text == "research") return SourceKind::Research;
    if (text == "encyclopedia") return SourceKind::Encyclopedia;
    return std::nullopt;
}

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

// Accepts YYYY, YYYY-MM, YYYY-MM-DD (digits only; month 1-12, day 1-31).
std::optional<std::array<int, 3>> parse_date(std::string_view s) {
    std::array<int, 3> parts{0, 0, 0};
    std::size_t field = 0;
    while (true) {
        std::size_t dash = s.find('-');
        std::string_view piece = s.substr(0, dash);
        if (field >= 3 || !parse_int(piece, parts[field])) return std::nullopt;
        if (field == 0 && piece.size() != 4) return std::nullopt;
        if (field > 0 && piece.size() != 2) return std::nullopt;
        ++field;
        if (dash == std::string_view::npos) break;
        s.remove_prefix(dash + 1);
    }
    if (field >= 2 && (parts[1] < 1 || parts[1] > 12)) return std::nullopt;
    if (field == 3 && (parts[2] < 1 || parts[2] > 31)) return std::nullopt;
    return parts;
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw MalformedDocument(std::string("field '") + key + "' is not a string");
    return it->get<std::string>();
}

}  // namespace

std::array<int, 3> date_key(std::string_view pub_date) {
    return parse_date(pub_date).value_or(std::array<int, 3>{0, 0, 0});
}

int DocumentRecord::pub_year() const { return date_key(pub_date)[0]; }

DocumentRecord parse_document(std::string_view line) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::exception& e) {
        throw MalformedDocument(e.what());
    }
    if (!obj.is_object()) throw MalformedDocument("record is not an object");

    DocumentRecord doc;
    auto id = optional_string(obj, "doc_id");
    if (!id || id->empty()) throw MalformedDocument("missing doc_id");
    if (id->find_first_of(" \t\r\n") != std::string::npos) throw MalformedDocument("doc_id contains whitespace");
    doc.doc_id = std::move(*id);

    auto kind_text = optional_string(obj, "source_kind");
    auto kind = kind_text ? parse_source_kind(*kind_text) : std::optional<SourceKind>{SourceKind::Research};
    if (!kind) throw MalformedDocument("unknown source_kind in " + doc.doc_id);
    doc.source_kind = *kind;

    auto title = optional_string(obj, "title");
    if (!title || title->empty()) throw MalformedDocument("empty title in " + doc.doc_id);
    doc.title = std::move(*title);
    doc.abstract_text = optional_string(obj, "abstract");
    doc.full_text = optional_string(obj, "full_text");
    doc.url = optional_string(obj, "url");

    // Bare integer years are accepted too.
    std::optional<std::string> date;
    if (auto it = obj.find("pub_date"); it != obj.end() && it->is_number_integer()) {
        date = std::to_string(it->get<long long>());
    } else {
        date = optional_string(obj, "pub_date");
    }
    auto parts = date ? parse_date(*date) : std::nullopt;
    if (!parts) throw MalformedDocument("bad pub_date in " + doc.doc_id);
    if ((*parts)[0] < 1500 || (*parts)[0] > 2200) throw MalformedDocument("pub_date year out of range in " + doc.doc_id);
    doc.pub_date = std::move(*date);

    if (auto subject = optional_string(obj, "subject_concept"); subject && !subject->empty()) {
        doc.subject_concept = ConceptId(std::move(*subject));
    }
    if (doc.subject_concept.has_value() != (doc.source_kind == SourceKind::Encyclopedia)) {
        throw MalformedDocument("subject_concept must be set exactly for encyclopedia records (" + doc.doc_id + ")");
    }
    return doc;
}

void TermMultiset::add(const ConceptId& id, std::uint32_t n) {
    if (n == 0) return;
    counts_[id] += n;
}

void TermMultiset::raise_to(const ConceptId& id, std::uint32_t n) {
    if (n == 0) return;
    auto& c = counts_[id];
    if (c < n) c = n;
}

std::uint32_t TermMultiset::count(const ConceptId& id) const {
    auto it = counts_.find(id);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t TermMultiset::total() const {
    std::uint64_t sum = 0;
    for (const auto& [id, n] : counts_) sum += n;
    return sum;
}

TermMatcher::TermMatcher(const Dictionary& dict) {
    nodes_.emplace_back();
    for (const auto& [surface, entry] : dict.surface_index()) {
        std::uint32_t node = 0;
        for (auto token : split_tokens(surface)) {
            auto it = nodes_[node].next.find(std::string(token));
            if (it == nodes_[node].next.end()) {
                const auto fresh = static_cast<std::uint32_t>(nodes_.size());
                nodes_[node].next.emplace(std::string(token), fresh);
                nodes_.emplace_back();
                node = fresh;
            } else {
                node = it->second;
            }
        }
        nodes_[node].terminal = entry.id;
    }
}

std::vector<MatchSpan> TermMatcher::scan(std::string_view text) const {
    const std::string norm = normalize(text);
    const auto tokens = split_tokens(norm);
    std::vector<MatchSpan> spans;
    std::string key;
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::uint32_t node = 0;
        std::size_t best_end = 0;
        const ConceptId* best = nullptr;
        for (std::size_t j = i; j < tokens.size(); ++j) {
            key.assign(tokens[j]);
            auto it = nodes_[node].next.find(key);
            if (it == nodes_[node].next.end()) break;
            node = it->second;
            if (nodes_[node].terminal) {
                best = &*nodes_[node].terminal;
                best_end = j + 1;
            }
        }
        if (best != nullptr) {
            spans.push_back({i, best_end, *best});
            i = best_end;
        } else {
            ++i;
        }
    }
    return spans;
}

TermMultiset TermMatcher::extract(std::string_view text) const {
    TermMultiset out;
    for (const auto& span : scan(text)) out.add(span.id);
    return out;
}

TermMultiset extract_terms(std::string_view text, const Dictionary& dict) {
    return TermMatcher(dict).extract(text);
}

ZoneExtraction extract_document(const DocumentRecord& doc, const TermMatcher& matcher) {
    ZoneExtraction z;
    auto zone = [&](const std::string* text, TermMultiset& into) {
        if (text == nullptr) return;
        for (const auto& span : matcher.scan(*text)) {
            into.add(span.id);
            ++z.matched_spans;
        }
    };
    zone(&doc.title, z.title_terms);
    zone(doc.abstract_text ? &*doc.abstract_text : nullptr, z.abstract_terms);
    zone(doc.full_text ? &*doc.full_text : nullptr, z.fulltext_terms);
    if (doc.source_kind == SourceKind::Encyclopedia && doc.subject_concept) {
        z.title_terms.raise_to(*doc.subject_concept, 1);
    }
    return z;
}

ZoneExtraction extract_document(const DocumentRecord& doc, const Dictionary& dict) {
    return extract_document(doc, TermMatcher(dict));
}

}  // namespace coocnet

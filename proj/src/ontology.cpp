#include "coocnet/ontology.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coocnet/error.hpp"
#include "coocnet/text.hpp"

namespace coocnet {

using nlohmann::json;

std::string DictionaryError::describe(Kind kind, const std::string& detail, std::size_t line) {
    std::ostringstream os;
    switch (kind) {
        case Kind::MalformedRecord: os << "malformed dictionary record"; break;
        case Kind::DuplicateConceptId: os << "duplicate concept id"; break;
        case Kind::EmptyDictionary: os << "empty dictionary"; break;
        case Kind::Io: os << "cannot read dictionary"; break;
    }
    if (line != 0) os << " at line " << line;
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

bool Concept::has_semantic_type(std::string_view code) const {
    return std::find(semantic_types.begin(), semantic_types.end(), code) != semantic_types.end();
}

std::optional<std::string> Concept::grouping_tree_number() const {
    if (tree_numbers.empty()) return std::nullopt;
    return *std::min_element(tree_numbers.begin(), tree_numbers.end());
}

bool valid_tree_number(std::string_view tree_number) {
    if (tree_number.empty()) return false;
    std::size_t segment = 0;
    for (char c : tree_number) {
        if (c == '.') {
            if (segment == 0) return false;
            segment = 0;
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            return false;
        } else {
            ++segment;
        }
    }
    return segment != 0;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0x0F]);
    }
    return out;
}

namespace {

std::vector<std::string> string_list(const json& record, const char* key, std::size_t line) {
    std::vector<std::string> out;
    auto it = record.find(key);
    if (it == record.end() || it->is_null()) return out;
    if (!it->is_array()) {
        throw DictionaryError(DictionaryError::Kind::MalformedRecord,
                              std::string("field '") + key + "' is not a list", line);
    }
    for (const auto& v : *it) {
        if (!v.is_string()) {
            throw DictionaryError(DictionaryError::Kind::MalformedRecord,
                                  std::string("field '") + key + "' holds a non-string", line);
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

Concept parse_record(std::string_view text, std::size_t line) {
    json record;
    try {
        record = json::parse(text);
    } catch (const json::exception& e) {
        throw DictionaryError(DictionaryError::Kind::MalformedRecord, e.what(), line);
    }
    if (!record.is_object()) {
        throw DictionaryError(DictionaryError::Kind::MalformedRecord, "record is not an object", line);
    }
    auto str_field = [&](const char* key) {
        auto it = record.find(key);
        if (it == record.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
            throw DictionaryError(DictionaryError::Kind::MalformedRecord,
                                  std::string("missing or empty '") + key + "'", line);
        }
        return it->get<std::string>();
    };

    Concept c;
    c.id = ConceptId(str_field("id"));
    c.preferred_term = str_field("preferred_term");
    if (normalize(c.preferred_term).empty()) {
        throw DictionaryError(DictionaryError::Kind::MalformedRecord,
                              "preferred_term has no matchable characters", line);
    }

    // Synonyms that normalize to nothing or duplicate another form are dropped.
    std::set<std::string> seen{normalize(c.preferred_term)};
    for (auto& s : string_list(record, "synonyms", line)) {
        std::string key = normalize(s);
        if (key.empty() || !seen.insert(key).second) continue;
        c.synonyms.push_back(std::move(s));
    }

    c.tree_numbers = string_list(record, "tree_numbers", line);
    for (const auto& t : c.tree_numbers) {
        if (!valid_tree_number(t)) {
            throw DictionaryError(DictionaryError::Kind::MalformedRecord, "bad tree number '" + t + "'", line);
        }
    }
    std::sort(c.tree_numbers.begin(), c.tree_numbers.end());
    c.tree_numbers.erase(std::unique(c.tree_numbers.begin(), c.tree_numbers.end()), c.tree_numbers.end());

    c.semantic_types = string_list(record, "semantic_types", line);
    return c;
}

}  // namespace

Dictionary Dictionary::parse(std::string source) {
    Dictionary dict;
    std::vector<Concept> concepts;
    std::map<std::string, std::size_t> id_line;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        std::size_t end = source.find('\n', pos);
        if (end == std::string::npos) end = source.size();
        std::string_view line(source.data() + pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        Concept c = parse_record(line, line_no);
        if (!id_line.emplace(c.id.value, line_no).second) {
            throw DictionaryError(DictionaryError::Kind::DuplicateConceptId, c.id.value, line_no);
        }
        concepts.push_back(std::move(c));
    }
    if (concepts.empty()) {
        throw DictionaryError(DictionaryError::Kind::EmptyDictionary, {});
    }

    std::sort(concepts.begin(), concepts.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });

    // Every claimant of each normalized surface, in ascending id order since
    // concepts are already sorted.
    std::map<std::string, std::vector<SurfaceEntry>> claims;
    for (const auto& c : concepts) {
        claims[normalize(c.preferred_term)].push_back({c.id, c.preferred_term});
        for (const auto& s : c.synonyms) claims[normalize(s)].push_back({c.id, s});
    }
    for (auto& [surface, entries] : claims) {
        dict.surface_index_.emplace(surface, entries.front());
        if (entries.size() > 1) {
            Ambiguity amb{surface, entries.front().id, {}};
            for (std::size_t i = 1; i < entries.size(); ++i) amb.rejected.push_back(entries[i].id);
            dict.summary_.ambiguities.push_back(std::move(amb));
        }
    }

    for (const auto& c : concepts) {
        for (const auto& t : c.tree_numbers) dict.tree_owner_.emplace(t, c.id);
    }

    for (std::size_t i = 0; i < concepts.size(); ++i) dict.by_id_.emplace(concepts[i].id.value, i);
    dict.concepts_ = std::move(concepts);
    dict.summary_.concepts = dict.concepts_.size();
    dict.summary_.surface_keys = dict.surface_index_.size();
    dict.checksum_ = sha256_hex(source);
    dict.source_ = std::move(source);
    return dict;
}

const Concept* Dictionary::find(const ConceptId& id) const {
    auto it = by_id_.find(id.value);
    return it == by_id_.end() ? nullptr : &concepts_[it->second];
}

const Concept& Dictionary::at(const ConceptId& id) const {
    const Concept* c = find(id);
    if (c == nullptr) throw UnknownConcept(id.value);
    return *c;
}

Dictionary load_dictionary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DictionaryError(DictionaryError::Kind::Io, path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return Dictionary::parse(std::move(buf).str());
}

std::optional<ConceptId> resolve_term(const Dictionary& dict, std::string_view surface) {
    const auto& index = dict.surface_index();
    auto it = index.find(normalize(surface));
    if (it == index.end()) return std::nullopt;
    return it->second.id;
}

std::string category_name(const Dictionary& dict, std::string_view tree_prefix) {
    const auto& owners = dict.tree_name_owners();
    auto it = owners.find(std::string(tree_prefix));
    if (it == owners.end()) return std::string(tree_prefix);
    return dict.at(it->second).preferred_term;
}

}  // namespace coocnet

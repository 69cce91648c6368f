#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coocnet {

/// Opaque vocabulary identifier such as "D014806".
struct ConceptId {
    std::string value;

    ConceptId() = default;
    explicit ConceptId(std::string v) : value(std::move(v)) {}

    auto operator<=>(const ConceptId&) const = default;
    bool operator==(const ConceptId&) const = default;
};

struct Concept {
    ConceptId id;
    std::string preferred_term;
    std::vector<std::string> synonyms;
    std::vector<std::string> tree_numbers;
    std::vector<std::string> semantic_types;

    bool has_semantic_type(std::string_view code) const;
    /// Lexicographically smallest tree number, used to place the concept in
    /// exactly one branch of a result hierarchy.
    std::optional<std::string> grouping_tree_number() const;
};

/// A surface form resolved to its owning concept. `display` keeps the
/// original spelling from the dictionary file.
struct SurfaceEntry {
    ConceptId id;
    std::string display;
};

/// A normalized surface form claimed by more than one concept.
struct Ambiguity {
    std::string surface;
    ConceptId chosen;
    std::vector<ConceptId> rejected;
};

struct LoadSummary {
    std::size_t concepts = 0;
    std::size_t surface_keys = 0;
    std::vector<Ambiguity> ambiguities;
};

/// Immutable controlled vocabulary. Safe for concurrent reads.
class Dictionary {
public:
    /// Parses the line-delimited record format. `source` is kept verbatim so
    /// an index can carry an exact copy of the vocabulary it was built from.
    static Dictionary parse(std::string source);

    const Concept* find(const ConceptId& id) const;
    const Concept& at(const ConceptId& id) const;
    bool contains(const ConceptId& id) const { return find(id) != nullptr; }

    /// Concepts in ascending ConceptId order.
    const std::vector<Concept>& concepts() const noexcept { return concepts_; }
    std::size_t size() const noexcept { return concepts_.size(); }

    /// Keyed by normalized surface form.
    const std::map<std::string, SurfaceEntry>& surface_index() const noexcept { return surface_index_; }
    const std::map<std::string, ConceptId>& tree_name_owners() const noexcept { return tree_owner_; }

    const LoadSummary& summary() const noexcept { return summary_; }
    const std::string& source() const noexcept { return source_; }
    /// Hex SHA-256 of source().
    const std::string& checksum() const noexcept { return checksum_; }

private:
    std::vector<Concept> concepts_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::map<std::string, SurfaceEntry> surface_index_;
    std::map<std::string, ConceptId> tree_owner_;
    LoadSummary summary_;
    std::string source_;
    std::string checksum_;
};

Dictionary load_dictionary(const std::filesystem::path& path);

std::optional<ConceptId> resolve_term(const Dictionary& dict, std::string_view surface);

/// Display name for a tree-number prefix: the preferred term of the concept
/// owning that tree number, or the prefix itself when no concept owns it.
std::string category_name(const Dictionary& dict, std::string_view tree_prefix);

/// True for strings of the form segment("."segment)* with nonempty segments.
bool valid_tree_number(std::string_view tree_number);

std::string sha256_hex(std::string_view data);

}  // namespace coocnet

template <>
struct std::hash<coocnet::ConceptId> {
    std::size_t operator()(const coocnet::ConceptId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};

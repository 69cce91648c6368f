#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coocnet/cooc.hpp"
#include "coocnet/store.hpp"

namespace coocnet {

/// Unit-cost edit distance over Unicode code points.
std::size_t levenshtein(std::string_view a, std::string_view b);
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

struct Suggestion {
    ConceptId concept_id;
    std::string display;
    std::size_t distance = 0;

    bool operator==(const Suggestion&) const = default;
};

/// Maximum edit distance for a form to be suggested without containing the
/// query.
inline constexpr std::size_t kSuggestMaxDistance = 3;

/// Precomputed decoded surface forms for fast suggestion scans.
class SuggestionIndex {
public:
    struct Form {
        std::string normalized;
        std::u32string code_points;
        std::string display;
        ConceptId id;
    };

    explicit SuggestionIndex(const Dictionary& dict);

    /// Distance-ranked suggestions, one per concept, at most k.
    std::vector<Suggestion> suggest(std::string_view query, std::size_t k) const;
    /// Same output computed without threads; kept as the reference.
    std::vector<Suggestion> suggest_serial(std::string_view query, std::size_t k) const;

    const std::vector<Form>& forms() const noexcept { return forms_; }

private:
    std::vector<Suggestion> rank(const std::vector<std::optional<std::size_t>>& distances, std::size_t k) const;
    std::vector<Form> forms_;
};

namespace kernels {
/// Candidate distance of every form against the normalized query: the
/// length difference when the form contains the query, else the edit
/// distance when it is within kSuggestMaxDistance, else nullopt.
std::vector<std::optional<std::size_t>> score_forms_serial(const std::vector<SuggestionIndex::Form>& forms,
                                                           std::string_view normalized_query);
std::vector<std::optional<std::size_t>> score_forms_parallel(const std::vector<SuggestionIndex::Form>& forms,
                                                             std::string_view normalized_query);
}  // namespace kernels

std::vector<Suggestion> suggest(const Dictionary& dict, std::string_view query, std::size_t k);

enum class SourceColor { Orange, Green, Yellow };
std::string_view to_string(SourceColor color);

/// Display threshold: at least two research documents, or one encyclopedia
/// page about either end of the edge. Returns the leaf colour when the edge
/// passes, nullopt otherwise.
std::optional<SourceColor> classify_edge(std::size_t research_count, bool encyclopedia_hit);

inline constexpr std::size_t kMinResearchDocuments = 2;

struct NeighborEntry {
    ConceptId concept_id;
    double score = 0;
    std::size_t research_count = 0;
    bool encyclopedia_hit = false;
    SourceColor source_color = SourceColor::Orange;

    bool operator==(const NeighborEntry&) const = default;
};

struct PublicationItem {
    std::string doc_id;
    std::string title;
    int year = 0;
    std::string pub_date;
    std::optional<std::string> url;
    SourceKind source_kind = SourceKind::Research;

    bool operator==(const PublicationItem&) const = default;
};

struct PublicationList {
    std::size_t total = 0;
    std::vector<PublicationItem> items;
    /// Decade start year -> research item count.
    std::map<int, std::size_t> decade_histogram;
};

inline int decade_of(int year) { return year - (((year % 10) + 10) % 10); }

/// Read-only view over a bundle with per-concept adjacency. Safe for
/// concurrent use.
class QueryEngine {
public:
    explicit QueryEngine(std::shared_ptr<const IndexBundle> bundle);

    const IndexBundle& bundle() const noexcept { return *bundle_; }
    const Dictionary& dictionary() const noexcept { return *bundle_->dictionary; }

    std::vector<Suggestion> suggest(std::string_view query, std::size_t k) const {
        return suggestions_.suggest(query, k);
    }

    /// Throws UnknownConcept. Sorted by score desc, then id asc.
    std::vector<NeighborEntry> neighbors(const ConceptId& query_id,
                                         const std::optional<std::string>& semantic_type) const;

    /// Throws UnknownConcept or UnknownEdge.
    PublicationList edge_publications(const ConceptId& a, const ConceptId& b) const;

private:
    struct Adjacent {
        const ConceptId* other;
        const EdgeEvidence::PostingSet* postings;
    };

    std::shared_ptr<const IndexBundle> bundle_;
    SuggestionIndex suggestions_;
    std::unordered_map<ConceptId, std::vector<Adjacent>> adjacency_;
};

}  // namespace coocnet

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coocnet/ontology.hpp"

namespace coocnet {

enum class SourceKind { Research, Encyclopedia };

std::string_view to_string(SourceKind kind);
std::optional<SourceKind> parse_source_kind(std::string_view text);

struct DocumentRecord {
    std::string doc_id;
    SourceKind source_kind = SourceKind::Research;
    std::string title;
    std::optional<std::string> abstract_text;
    std::optional<std::string> full_text;
    /// "YYYY", "YYYY-MM" or "YYYY-MM-DD".
    std::string pub_date;
    std::optional<std::string> url;
    /// Encyclopedia pages only: the concept the page is about.
    std::optional<ConceptId> subject_concept;

    int pub_year() const;
};

/// Parses one corpus line. Throws MalformedDocument on any violation of the
/// record invariants (empty title, year outside [1500, 2200], subject present
/// on a research record or missing on an encyclopedia record, ...).
DocumentRecord parse_document(std::string_view line);

/// Sortable (year, month, day) key; missing parts are 0.
std::array<int, 3> date_key(std::string_view pub_date);

/// Concept -> occurrence count. Every stored count is >= 1.
class TermMultiset {
public:
    void add(const ConceptId& id, std::uint32_t n = 1);
    /// Raises the count of `id` to at least `n`.
    void raise_to(const ConceptId& id, std::uint32_t n);

    std::uint32_t count(const ConceptId& id) const;
    bool empty() const noexcept { return counts_.empty(); }
    /// Size of the support set.
    std::size_t distinct() const noexcept { return counts_.size(); }
    std::uint64_t total() const;

    const std::map<ConceptId, std::uint32_t>& counts() const noexcept { return counts_; }
    bool operator==(const TermMultiset&) const = default;

private:
    std::map<ConceptId, std::uint32_t> counts_;
};

struct ZoneExtraction {
    TermMultiset title_terms;
    TermMultiset abstract_terms;
    TermMultiset fulltext_terms;
    /// Spans actually matched in text (subject injection is not a span).
    std::size_t matched_spans = 0;
};

/// A matched run of tokens [begin, end) in the normalized text.
struct MatchSpan {
    std::size_t begin;
    std::size_t end;
    ConceptId id;

    bool operator==(const MatchSpan&) const = default;
};

/// Token trie over the normalized surface forms of a dictionary, answering
/// greedy leftmost-longest scans. Immutable after construction.
class TermMatcher {
public:
    explicit TermMatcher(const Dictionary& dict);

    /// Spans in increasing position order, never overlapping.
    std::vector<MatchSpan> scan(std::string_view text) const;
    TermMultiset extract(std::string_view text) const;

    std::size_t node_count() const noexcept { return nodes_.size(); }

private:
    struct Node {
        std::unordered_map<std::string, std::uint32_t> next;
        std::optional<ConceptId> terminal;
    };
    std::vector<Node> nodes_;
};

TermMultiset extract_terms(std::string_view text, const Dictionary& dict);

ZoneExtraction extract_document(const DocumentRecord& doc, const TermMatcher& matcher);
ZoneExtraction extract_document(const DocumentRecord& doc, const Dictionary& dict);

}  // namespace coocnet

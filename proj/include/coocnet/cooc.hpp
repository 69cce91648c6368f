#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coocnet/extract.hpp"
#include "coocnet/ontology.hpp"

namespace coocnet {

/// Weight function applied to the pair of occurrence counts.
enum class ZKind { Unit, Product, Min };

/// The six ordered zone combinations the operator is evaluated over. There
/// is deliberately no A-T, F-T or F-A.
enum class ZonePair { TT, TA, TF, AA, AF, FF };

inline constexpr std::array<ZonePair, 6> kZonePairs{ZonePair::TT, ZonePair::TA, ZonePair::TF,
                                                    ZonePair::AA, ZonePair::AF, ZonePair::FF};

std::string_view to_string(ZonePair zp);
std::string_view to_string(ZKind kind);

struct WeightConfig {
    ZKind z_kind = ZKind::Unit;
    std::array<double, 6> w{8, 4, 2, 2, 1, 1};

    double weight(ZonePair zp) const { return w[static_cast<std::size_t>(zp)]; }
    double& weight(ZonePair zp) { return w[static_cast<std::size_t>(zp)]; }
    double z(std::uint32_t p_count, std::uint32_t q_count) const;

    /// Throws ConfigError unless every weight is finite and >= 0 with at
    /// least one > 0.
    void validate() const;

    bool operator==(const WeightConfig&) const = default;
};

/// {"z_kind": "unit", "w": {"TT":8, ...}}. All six keys are required.
WeightConfig parse_weight_config(std::string_view text);
WeightConfig load_weight_config(const std::filesystem::path& path);
std::string weight_config_json(const WeightConfig& cfg);

/// Bijection between concepts and 1..|M|, assigned in ascending id order.
class ConceptIndexMap {
public:
    ConceptIndexMap() = default;
    explicit ConceptIndexMap(const Dictionary& dict);

    std::optional<std::uint32_t> index(const ConceptId& id) const;
    /// Throws UnknownConcept.
    std::uint32_t at(const ConceptId& id) const;
    const ConceptId& id(std::uint32_t index) const { return reverse_.at(index - 1); }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(reverse_.size()); }

    bool operator==(const ConceptIndexMap& other) const { return reverse_ == other.reverse_; }

private:
    std::unordered_map<ConceptId, std::uint32_t> forward_;
    std::vector<ConceptId> reverse_;
};

struct MatrixEntry {
    std::uint32_t row;
    std::uint32_t col;
    double score;

    bool operator==(const MatrixEntry&) const = default;
};

/// Sparse |M| x |M| accumulator. Never stores a zero.
class CooccurrenceMatrix {
public:
    void add(std::uint32_t row, std::uint32_t col, double value);
    double get(std::uint32_t row, std::uint32_t col) const;
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Entries sorted by (row, col).
    std::vector<MatrixEntry> sorted_entries() const;
    void merge_from(const CooccurrenceMatrix& other);

    bool operator==(const CooccurrenceMatrix& other) const { return entries_ == other.entries_; }

private:
    static std::uint64_t key(std::uint32_t row, std::uint32_t col) {
        return (static_cast<std::uint64_t>(row) << 32) | col;
    }
    std::unordered_map<std::uint64_t, double> entries_;
};

struct Posting {
    std::string doc_id;
    int pub_year = 0;
    SourceKind source_kind = SourceKind::Research;
    std::optional<ConceptId> subject_concept;

    bool operator==(const Posting&) const = default;
};

/// Unordered concept pair stored with first < second.
struct EdgeKey {
    ConceptId first;
    ConceptId second;

    static EdgeKey of(const ConceptId& a, const ConceptId& b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }
    auto operator<=>(const EdgeKey&) const = default;
    bool operator==(const EdgeKey&) const = default;
};

/// Per-pair posting sets keyed by doc_id, so a document appears at most
/// once per pair and unions are idempotent.
class EdgeEvidence {
public:
    using PostingSet = std::map<std::string, Posting>;

    /// Requires a != b. Returns false when the document was already posted.
    bool add(const ConceptId& a, const ConceptId& b, const Posting& posting);
    const PostingSet* find(const ConceptId& a, const ConceptId& b) const;

    const std::map<EdgeKey, PostingSet>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t posting_count() const;
    void merge_from(const EdgeEvidence& other);

    bool operator==(const EdgeEvidence&) const = default;

private:
    std::map<EdgeKey, PostingSet> edges_;
};

/// The subset of a document kept for the publication panel.
struct DocumentMeta {
    std::string doc_id;
    SourceKind source_kind = SourceKind::Research;
    std::string title;
    std::string pub_date;
    std::optional<std::string> url;
    std::optional<ConceptId> subject_concept;

    bool operator==(const DocumentMeta&) const = default;
};

using DocumentCatalog = std::map<std::string, DocumentMeta>;

struct BuildStats {
    std::uint64_t documents_processed = 0;
    std::uint64_t documents_skipped = 0;
    std::uint64_t matched_spans = 0;
    std::uint64_t distinct_edges = 0;

    bool operator==(const BuildStats&) const = default;
};

struct CooccurrenceTuple {
    ConceptId p;
    ConceptId q;
    double z;

    bool operator==(const CooccurrenceTuple&) const = default;
};

/// Every ordered (p, q) over the two supports, p == q included.
std::vector<CooccurrenceTuple> cooccur(const TermMultiset& p, const TermMultiset& q, const WeightConfig& cfg);

void accumulate_document(const ZoneExtraction& zones, const WeightConfig& cfg, const ConceptIndexMap& fmap,
                         CooccurrenceMatrix& matrix, EdgeEvidence& evidence, const DocumentRecord& doc);

/// Symmetrized read: C(a,b) + C(b,a) for a != b, C(a,a) on the diagonal.
double relatedness(const CooccurrenceMatrix& matrix, const ConceptIndexMap& fmap, const ConceptId& a,
                   const ConceptId& b);

struct BuildResult {
    ConceptIndexMap fmap;
    CooccurrenceMatrix matrix;
    EdgeEvidence evidence;
    BuildStats stats;
    DocumentCatalog documents;
};

/// Folds documents into an index one at a time. Malformed records, records
/// naming an unknown subject concept, and repeated doc_ids are skipped and
/// counted.
class IndexBuilder {
public:
    IndexBuilder(const Dictionary& dict, WeightConfig cfg);

    bool add_line(std::string_view line);
    bool add(const DocumentRecord& doc);
    /// For callers that extracted the zones themselves (parallel path).
    bool add(const DocumentRecord& doc, const ZoneExtraction& zones);
    void skip() { ++result_.stats.documents_skipped; }

    BuildResult finish() &&;

private:
    const Dictionary& dict_;
    WeightConfig cfg_;
    TermMatcher matcher_;
    BuildResult result_;
};

/// Serial reference build over a corpus stream (one record per line).
BuildResult build_index_serial(std::istream& corpus, const Dictionary& dict, const WeightConfig& cfg);

/// Same result as build_index_serial, with parsing and extraction spread
/// across OpenMP threads. threads <= 0 uses the OpenMP default.
BuildResult build_index(std::istream& corpus, const Dictionary& dict, const WeightConfig& cfg, int threads = 0);

}  // namespace coocnet

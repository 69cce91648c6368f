#include "coocnet/query.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coocnet/error.hpp"
#include "coocnet/text.hpp"

namespace coocnet {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({up + 1, row[j - 1] + 1, sub});
            diag = up;
        }
    }
    return row[b.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    return levenshtein(std::u32string_view(decode_utf8(a)), std::u32string_view(decode_utf8(b)));
}

namespace kernels {
namespace {

std::optional<std::size_t> score_one(const SuggestionIndex::Form& form, std::string_view query,
                                     std::u32string_view query_cp) {
    const std::size_t lf = form.code_points.size();
    const std::size_t lq = query_cp.size();
    const std::size_t diff = lf > lq ? lf - lq : lq - lf;
    if (form.normalized.find(query) != std::string::npos) return diff;
    if (diff > kSuggestMaxDistance) return std::nullopt;
    const std::size_t d = levenshtein(std::u32string_view(form.code_points), query_cp);
    if (d > kSuggestMaxDistance) return std::nullopt;
    return d;
}

}  // namespace

std::vector<std::optional<std::size_t>> score_forms_serial(const std::vector<SuggestionIndex::Form>& forms,
                                                           std::string_view normalized_query) {
    const std::u32string query_cp = decode_utf8(normalized_query);
    std::vector<std::optional<std::size_t>> out(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) out[i] = score_one(forms[i], normalized_query, query_cp);
    return out;
}

std::vector<std::optional<std::size_t>> score_forms_parallel(const std::vector<SuggestionIndex::Form>& forms,
                                                             std::string_view normalized_query) {
    const std::u32string query_cp = decode_utf8(normalized_query);
    std::vector<std::optional<std::size_t>> out(forms.size());
    const auto n = static_cast<std::int64_t>(forms.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = score_one(forms[i], normalized_query, query_cp);
    return out;
}

}  // namespace kernels

SuggestionIndex::SuggestionIndex(const Dictionary& dict) {
    forms_.reserve(dict.surface_index().size());
    for (const auto& [surface, entry] : dict.surface_index()) {
        forms_.push_back({surface, decode_utf8(surface), entry.display, entry.id});
    }
}

std::vector<Suggestion> SuggestionIndex::rank(const std::vector<std::optional<std::size_t>>& distances,
                                              std::size_t k) const {
    std::unordered_map<ConceptId, Suggestion> best;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (!distances[i]) continue;
        Suggestion s{forms_[i].id, forms_[i].display, *distances[i]};
        auto [it, inserted] = best.emplace(s.concept_id, s);
        if (!inserted && std::tie(s.distance, s.display) < std::tie(it->second.distance, it->second.display)) {
            it->second = std::move(s);
        }
    }
    std::vector<Suggestion> out;
    out.reserve(best.size());
    for (auto& [id, s] : best) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
        return std::tie(a.distance, a.display, a.concept_id) < std::tie(b.distance, b.display, b.concept_id);
    });
    if (out.size() > k) out.resize(k);
    return out;
}

std::vector<Suggestion> SuggestionIndex::suggest(std::string_view query, std::size_t k) const {
    const std::string q = normalize(query);
    if (q.empty() || k == 0) return {};
    return rank(kernels::score_forms_parallel(forms_, q), k);
}

std::vector<Suggestion> SuggestionIndex::suggest_serial(std::string_view query, std::size_t k) const {
    const std::string q = normalize(query);
    if (q.empty() || k == 0) return {};
    return rank(kernels::score_forms_serial(forms_, q), k);
}

std::vector<Suggestion> suggest(const Dictionary& dict, std::string_view query, std::size_t k) {
    return SuggestionIndex(dict).suggest(query, k);
}

std::string_view to_string(SourceColor color) {
    switch (color) {
        case SourceColor::Orange: return "orange";
        case SourceColor::Green: return "green";
        case SourceColor::Yellow: return "yellow";
    }
    return "orange";
}

std::optional<SourceColor> classify_edge(std::size_t research_count, bool encyclopedia_hit) {
    if (research_count < kMinResearchDocuments && !encyclopedia_hit) return std::nullopt;
    if (!encyclopedia_hit) return SourceColor::Orange;
    return research_count == 0 ? SourceColor::Green : SourceColor::Yellow;
}

QueryEngine::QueryEngine(std::shared_ptr<const IndexBundle> bundle)
    : bundle_(std::move(bundle)), suggestions_(*bundle_->dictionary) {
    for (const auto& [key, postings] : bundle_->evidence.edges()) {
        adjacency_[key.first].push_back({&key.second, &postings});
        adjacency_[key.second].push_back({&key.first, &postings});
    }
}

std::vector<NeighborEntry> QueryEngine::neighbors(const ConceptId& query_id,
                                                  const std::optional<std::string>& semantic_type) const {
    const Dictionary& dict = dictionary();
    dict.at(query_id);

    std::vector<NeighborEntry> out;
    auto adj = adjacency_.find(query_id);
    if (adj == adjacency_.end()) return out;

    for (const Adjacent& edge : adj->second) {
        const ConceptId& other = *edge.other;
        if (semantic_type && !dict.at(other).has_semantic_type(*semantic_type)) continue;

        NeighborEntry e;
        e.concept_id = other;
        for (const auto& [doc, p] : *edge.postings) {
            if (p.source_kind == SourceKind::Research) {
                ++e.research_count;
            } else if (p.subject_concept && (*p.subject_concept == query_id || *p.subject_concept == other)) {
                e.encyclopedia_hit = true;
            }
        }
        auto color = classify_edge(e.research_count, e.encyclopedia_hit);
        if (!color) continue;
        e.source_color = *color;
        e.score = relatedness(bundle_->matrix, bundle_->fmap, query_id, other);
        // A zero weight on every zone pair the two concepts met in leaves no score.
        if (e.score <= 0) continue;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const NeighborEntry& a, const NeighborEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.concept_id < b.concept_id;
    });
    return out;
}

PublicationList QueryEngine::edge_publications(const ConceptId& a, const ConceptId& b) const {
    dictionary().at(a);
    dictionary().at(b);
    const auto* postings = a == b ? nullptr : bundle_->evidence.find(a, b);
    if (postings == nullptr || postings->empty()) throw UnknownEdge(a.value, b.value);

    PublicationList list;
    for (const auto& [doc_id, p] : *postings) {
        PublicationItem item;
        item.doc_id = doc_id;
        item.year = p.pub_year;
        item.source_kind = p.source_kind;
        item.pub_date = std::to_string(p.pub_year);
        if (auto meta = bundle_->documents.find(doc_id); meta != bundle_->documents.end()) {
            item.title = meta->second.title;
            item.pub_date = meta->second.pub_date;
            item.url = meta->second.url;
        }
        if (p.source_kind == SourceKind::Research) ++list.decade_histogram[decade_of(p.pub_year)];
        list.items.push_back(std::move(item));
    }
    std::sort(list.items.begin(), list.items.end(), [](const PublicationItem& x, const PublicationItem& y) {
        const bool xe = x.source_kind == SourceKind::Encyclopedia;
        const bool ye = y.source_kind == SourceKind::Encyclopedia;
        if (xe != ye) return xe;
        const auto dx = date_key(x.pub_date);
        const auto dy = date_key(y.pub_date);
        if (dx != dy) return dx > dy;
        return x.doc_id < y.doc_id;
    });
    list.total = list.items.size();
    return list;
}

}  // namespace coocnet

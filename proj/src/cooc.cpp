#include "coocnet/cooc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "coocnet/error.hpp"

namespace coocnet {

using nlohmann::json;

std::string_view to_string(ZonePair zp) {
    static constexpr std::array<std::string_view, 6> kNames{"TT", "TA", "TF", "AA", "AF", "FF"};
    return kNames[static_cast<std::size_t>(zp)];
}

std::string_view to_string(ZKind kind) {
    switch (kind) {
        case ZKind::Unit: return "unit";
        case ZKind::Product: return "product";
        case ZKind::Min: return "min";
    }
    return "unit";
}

double WeightConfig::z(std::uint32_t p_count, std::uint32_t q_count) const {
    switch (z_kind) {
        case ZKind::Unit: return 1.0;
        case ZKind::Product: return static_cast<double>(p_count) * static_cast<double>(q_count);
        case ZKind::Min: return static_cast<double>(std::min(p_count, q_count));
    }
    return 1.0;
}

void WeightConfig::validate() const {
    bool any_positive = false;
    for (double v : w) {
        if (!std::isfinite(v) || v < 0) throw ConfigError("weights must be finite and nonnegative");
        any_positive = any_positive || v > 0;
    }
    if (!any_positive) throw ConfigError("at least one zone-pair weight must be positive");
}

WeightConfig parse_weight_config(std::string_view text) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("weight config: ") + e.what());
    }
    if (!obj.is_object()) throw ConfigError("weight config must be an object");

    WeightConfig cfg;
    if (auto it = obj.find("z_kind"); it != obj.end()) {
        const std::string kind = it->is_string() ? it->get<std::string>() : std::string();
        if (kind == "unit") cfg.z_kind = ZKind::Unit;
        else if (kind == "product") cfg.z_kind = ZKind::Product;
        else if (kind == "min") cfg.z_kind = ZKind::Min;
        else throw ConfigError("unknown z_kind '" + kind + "'");
    }
    auto w = obj.find("w");
    if (w == obj.end() || !w->is_object()) throw ConfigError("weight config needs a 'w' object");
    for (ZonePair zp : kZonePairs) {
        auto it = w->find(std::string(to_string(zp)));
        if (it == w->end() || !it->is_number()) {
            throw ConfigError("weight config is missing numeric w." + std::string(to_string(zp)));
        }
        cfg.weight(zp) = it->get<double>();
    }
    cfg.validate();
    return cfg;
}

WeightConfig load_weight_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read weight config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weight_config(buf.str());
}

std::string weight_config_json(const WeightConfig& cfg) {
    nlohmann::ordered_json obj;
    obj["z_kind"] = to_string(cfg.z_kind);
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (ZonePair zp : kZonePairs) w[std::string(to_string(zp))] = cfg.weight(zp);
    obj["w"] = std::move(w);
    return obj.dump();
}

ConceptIndexMap::ConceptIndexMap(const Dictionary& dict) {
    reverse_.reserve(dict.size());
    for (const auto& c : dict.concepts()) {
        reverse_.push_back(c.id);
        forward_.emplace(c.id, static_cast<std::uint32_t>(reverse_.size()));
    }
}

std::optional<std::uint32_t> ConceptIndexMap::index(const ConceptId& id) const {
    auto it = forward_.find(id);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t ConceptIndexMap::at(const ConceptId& id) const {
    auto it = forward_.find(id);
    if (it == forward_.end()) throw UnknownConcept(id.value);
    return it->second;
}

void CooccurrenceMatrix::add(std::uint32_t row, std::uint32_t col, double value) {
    if (value == 0.0) return;
    entries_[key(row, col)] += value;
}

double CooccurrenceMatrix::get(std::uint32_t row, std::uint32_t col) const {
    auto it = entries_.find(key(row, col));
    return it == entries_.end() ? 0.0 : it->second;
}

std::vector<MatrixEntry> CooccurrenceMatrix::sorted_entries() const {
    std::vector<std::pair<std::uint64_t, double>> raw(entries_.begin(), entries_.end());
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MatrixEntry> out;
    out.reserve(raw.size());
    for (const auto& [k, v] : raw) {
        out.push_back({static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k & 0xFFFFFFFFu), v});
    }
    return out;
}

void CooccurrenceMatrix::merge_from(const CooccurrenceMatrix& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] += v;
}

bool EdgeEvidence::add(const ConceptId& a, const ConceptId& b, const Posting& posting) {
    return edges_[EdgeKey::of(a, b)].emplace(posting.doc_id, posting).second;
}

const EdgeEvidence::PostingSet* EdgeEvidence::find(const ConceptId& a, const ConceptId& b) const {
    auto it = edges_.find(EdgeKey::of(a, b));
    return it == edges_.end() ? nullptr : &it->second;
}

std::size_t EdgeEvidence::posting_count() const {
    std::size_t n = 0;
    for (const auto& [key, postings] : edges_) n += postings.size();
    return n;
}

void EdgeEvidence::merge_from(const EdgeEvidence& other) {
    for (const auto& [key, postings] : other.edges_) {
        auto& mine = edges_[key];
        for (const auto& [doc, posting] : postings) mine.emplace(doc, posting);
    }
}

std::vector<CooccurrenceTuple> cooccur(const TermMultiset& p, const TermMultiset& q, const WeightConfig& cfg) {
    std::vector<CooccurrenceTuple> out;
    out.reserve(p.distinct() * q.distinct());
    for (const auto& [pid, pn] : p.counts()) {
        for (const auto& [qid, qn] : q.counts()) out.push_back({pid, qid, cfg.z(pn, qn)});
    }
    return out;
}

void accumulate_document(const ZoneExtraction& zones, const WeightConfig& cfg, const ConceptIndexMap& fmap,
                         CooccurrenceMatrix& matrix, EdgeEvidence& evidence, const DocumentRecord& doc) {
    const TermMultiset* zone_of[3] = {&zones.title_terms, &zones.abstract_terms, &zones.fulltext_terms};
    static constexpr std::array<std::pair<int, int>, 6> kOperands{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

    for (ZonePair zp : kZonePairs) {
        const double w = cfg.weight(zp);
        if (w == 0.0) continue;
        const auto [pi, qi] = kOperands[static_cast<std::size_t>(zp)];
        for (const auto& t : cooccur(*zone_of[pi], *zone_of[qi], cfg)) {
            matrix.add(fmap.at(t.p), fmap.at(t.q), w * t.z);
        }
    }

    std::set<ConceptId> present;
    for (const auto* zone : zone_of) {
        for (const auto& [id, n] : zone->counts()) present.insert(id);
    }
    const Posting posting{doc.doc_id, doc.pub_year(), doc.source_kind, doc.subject_concept};
    for (auto a = present.begin(); a != present.end(); ++a) {
        for (auto b = std::next(a); b != present.end(); ++b) evidence.add(*a, *b, posting);
    }
}

double relatedness(const CooccurrenceMatrix& matrix, const ConceptIndexMap& fmap, const ConceptId& a,
                   const ConceptId& b) {
    const std::uint32_t ia = fmap.at(a);
    const std::uint32_t ib = fmap.at(b);
    if (ia == ib) return matrix.get(ia, ia);
    return matrix.get(ia, ib) + matrix.get(ib, ia);
}

IndexBuilder::IndexBuilder(const Dictionary& dict, WeightConfig cfg)
    : dict_(dict), cfg_(cfg), matcher_(dict) {
    cfg_.validate();
    result_.fmap = ConceptIndexMap(dict);
}

bool IndexBuilder::add_line(std::string_view line) {
    DocumentRecord doc;
    try {
        doc = parse_document(line);
    } catch (const MalformedDocument&) {
        skip();
        return false;
    }
    return add(doc);
}

bool IndexBuilder::add(const DocumentRecord& doc) {
    if (doc.subject_concept && !dict_.contains(*doc.subject_concept)) {
        skip();
        return false;
    }
    return add(doc, extract_document(doc, matcher_));
}

bool IndexBuilder::add(const DocumentRecord& doc, const ZoneExtraction& zones) {
    if ((doc.subject_concept && !dict_.contains(*doc.subject_concept)) || result_.documents.contains(doc.doc_id)) {
        skip();
        return false;
    }
    accumulate_document(zones, cfg_, result_.fmap, result_.matrix, result_.evidence, doc);
    result_.documents.emplace(doc.doc_id, DocumentMeta{doc.doc_id, doc.source_kind, doc.title, doc.pub_date,
                                                       doc.url, doc.subject_concept});
    ++result_.stats.documents_processed;
    result_.stats.matched_spans += zones.matched_spans;
    return true;
}

BuildResult IndexBuilder::finish() && {
    result_.stats.distinct_edges = result_.evidence.edge_count();
    return std::move(result_);
}

namespace {

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

BuildResult build_index_serial(std::istream& corpus, const Dictionary& dict, const WeightConfig& cfg) {
    IndexBuilder builder(dict, cfg);
    std::string line;
    while (std::getline(corpus, line)) {
        if (is_blank(line)) continue;
        builder.add_line(line);
    }
    return std::move(builder).finish();
}

BuildResult build_index(std::istream& corpus, const Dictionary& dict, const WeightConfig& cfg, int threads) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(corpus, line);) {
        if (!is_blank(line)) lines.push_back(std::move(line));
    }

    struct Parsed {
        DocumentRecord doc;
        ZoneExtraction zones;
    };
    const TermMatcher matcher(dict);
    std::vector<std::optional<Parsed>> parsed(lines.size());
    const auto n = static_cast<std::int64_t>(lines.size());

#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            DocumentRecord doc = parse_document(lines[i]);
            ZoneExtraction zones = extract_document(doc, matcher);
            parsed[i] = Parsed{std::move(doc), std::move(zones)};
        } catch (const MalformedDocument&) {
            // left empty; counted as skipped below
        }
    }
    (void)threads;

    // Fold in input order so results are bit-identical to the serial path.
    IndexBuilder builder(dict, cfg);
    for (auto& p : parsed) {
        if (p) builder.add(p->doc, p->zones);
        else builder.skip();
    }
    return std::move(builder).finish();
}

}  // namespace coocnet

#include "coocnet/store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "coocnet/error.hpp"

namespace coocnet {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string StoreError::describe(Kind kind, const std::string& name, const std::string& reason) {
    std::string what;
    switch (kind) {
        case Kind::IoFailure: what = "i/o failure on "; break;
        case Kind::VersionMismatch: what = "unsupported index format version in "; break;
        case Kind::CorruptFile: what = "corrupt index file "; break;
        case Kind::MissingFile: what = "missing index file "; break;
        case Kind::IncompatibleIndexes: what = "incompatible indexes: "; break;
    }
    what += name;
    if (!reason.empty()) what += " (" + reason + ")";
    return what;
}

bool IndexBundle::operator==(const IndexBundle& other) const {
    return format_version == other.format_version && dictionary_checksum() == other.dictionary_checksum() &&
           weights == other.weights && fmap == other.fmap && matrix == other.matrix && evidence == other.evidence &&
           stats == other.stats && documents == other.documents;
}

IndexBundle make_bundle(std::shared_ptr<const Dictionary> dict, const WeightConfig& weights, BuildResult built) {
    IndexBundle b;
    b.dictionary = std::move(dict);
    b.weights = weights;
    b.fmap = std::move(built.fmap);
    b.matrix = std::move(built.matrix);
    b.evidence = std::move(built.evidence);
    b.stats = built.stats;
    b.documents = std::move(built.documents);
    return b;
}

namespace {

std::string format_score(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

ojson stats_json(const BuildStats& s) {
    ojson j;
    j["documents_processed"] = s.documents_processed;
    j["documents_skipped"] = s.documents_skipped;
    j["matched_spans"] = s.matched_spans;
    j["distinct_edges"] = s.distinct_edges;
    return j;
}

ojson optional_json(const std::optional<std::string>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string matrix_text(const IndexBundle& b) {
    std::string out;
    for (const auto& e : b.matrix.sorted_entries()) {
        out += std::to_string(e.row);
        out += ' ';
        out += std::to_string(e.col);
        out += ' ';
        out += format_score(e.score);
        out += '\n';
    }
    return out;
}

std::string evidence_text(const IndexBundle& b) {
    std::string out;
    std::vector<const Posting*> ordered;
    for (const auto& [key, postings] : b.evidence.edges()) {
        ordered.clear();
        for (const auto& [doc, p] : postings) ordered.push_back(&p);
        std::stable_sort(ordered.begin(), ordered.end(), [](const Posting* x, const Posting* y) {
            if (x->pub_year != y->pub_year) return x->pub_year > y->pub_year;
            return x->doc_id < y->doc_id;
        });
        for (const Posting* p : ordered) {
            out += key.first.value + ' ' + key.second.value + ' ' + p->doc_id + ' ' + std::to_string(p->pub_year) +
                   ' ' + std::string(to_string(p->source_kind));
            if (p->subject_concept) out += ' ' + p->subject_concept->value;
            out += '\n';
        }
    }
    return out;
}

std::string documents_text(const IndexBundle& b) {
    std::string out;
    for (const auto& [id, d] : b.documents) {
        ojson j;
        j["doc_id"] = d.doc_id;
        j["source_kind"] = to_string(d.source_kind);
        j["title"] = d.title;
        j["pub_date"] = d.pub_date;
        j["url"] = optional_json(d.url);
        j["subject_concept"] = d.subject_concept ? ojson(d.subject_concept->value) : ojson(nullptr);
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::size_t count_lines(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError(StoreError::Kind::IoFailure, path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw StoreError(StoreError::Kind::IoFailure, path.string());
}

std::string read_file(const fs::path& dir, const char* file, const char* logical) {
    const fs::path path = dir / file;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StoreError(StoreError::Kind::MissingFile, logical);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

[[noreturn]] void corrupt(const char* logical, const std::string& reason) {
    throw StoreError(StoreError::Kind::CorruptFile, logical, reason);
}

// Splits on '\n'; every line, including the last, must be terminated.
std::vector<std::string_view> lines_of(const std::string& text, const char* logical) {
    std::vector<std::string_view> lines;
    if (!text.empty() && text.back() != '\n') corrupt(logical, "missing final newline");
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        lines.emplace_back(text.data() + pos, end - pos);
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string_view> fields_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

const ojson& require(const ojson& obj, const char* key, const char* logical) {
    auto it = obj.find(key);
    if (it == obj.end()) corrupt(logical, std::string("missing '") + key + "'");
    return *it;
}

void check_file(const ojson& files, const char* logical, const std::string& text, bool counted) {
    const ojson& entry = require(files, logical, "manifest");
    try {
        if (entry.at("sha256").get<std::string>() != sha256_hex(text)) corrupt(logical, "checksum mismatch");
        if (counted && entry.at("entries").get<std::size_t>() != count_lines(text)) {
            corrupt(logical, "entry count mismatch");
        }
    } catch (const nlohmann::json::exception& e) {
        corrupt("manifest", e.what());
    }
}

}  // namespace

void save_index(const IndexBundle& bundle, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw StoreError(StoreError::Kind::IoFailure, dir.string(), ec.message());

    const std::string matrix = matrix_text(bundle);
    const std::string evidence = evidence_text(bundle);
    const std::string documents = documents_text(bundle);
    const std::string& dictionary = bundle.dictionary->source();

    ojson manifest;
    manifest["format_version"] = bundle.format_version;
    manifest["dictionary_checksum"] = bundle.dictionary_checksum();
    manifest["weight_config"] = ojson::parse(weight_config_json(bundle.weights));
    manifest["build_stats"] = stats_json(bundle.stats);
    ojson files;
    files["matrix"] = {{"entries", count_lines(matrix)}, {"sha256", sha256_hex(matrix)}};
    files["evidence"] = {{"entries", count_lines(evidence)}, {"sha256", sha256_hex(evidence)}};
    files["documents"] = {{"entries", count_lines(documents)}, {"sha256", sha256_hex(documents)}};
    files["dictionary"] = {{"sha256", sha256_hex(dictionary)}};
    manifest["files"] = std::move(files);

    write_file(dir / index_files::kMatrix, matrix);
    write_file(dir / index_files::kEvidence, evidence);
    write_file(dir / index_files::kDocuments, documents);
    write_file(dir / index_files::kDictionary, dictionary);
    write_file(dir / index_files::kManifest, manifest.dump(2) + "\n");
}

IndexBundle load_index(const fs::path& dir) {
    const std::string manifest_text = read_file(dir, index_files::kManifest, "manifest");
    ojson manifest;
    try {
        manifest = ojson::parse(manifest_text);
    } catch (const nlohmann::json::exception& e) {
        corrupt("manifest", e.what());
    }
    if (!manifest.is_object()) corrupt("manifest", "not an object");

    const ojson& version = require(manifest, "format_version", "manifest");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
        throw StoreError(StoreError::Kind::VersionMismatch, "manifest", "found " + version.dump());
    }

    IndexBundle b;
    const ojson& files = require(manifest, "files", "manifest");

    std::string dict_text = read_file(dir, index_files::kDictionary, "dictionary");
    check_file(files, "dictionary", dict_text, false);
    try {
        b.dictionary = std::make_shared<const Dictionary>(Dictionary::parse(std::move(dict_text)));
    } catch (const Error& e) {
        corrupt("dictionary", e.what());
    }
    const ojson& checksum = require(manifest, "dictionary_checksum", "manifest");
    if (!checksum.is_string() || checksum.get<std::string>() != b.dictionary->checksum()) {
        corrupt("dictionary", "checksum does not match manifest");
    }
    const Dictionary& dict = *b.dictionary;
    b.fmap = ConceptIndexMap(dict);

    try {
        b.weights = parse_weight_config(require(manifest, "weight_config", "manifest").dump());
        const ojson& stats = require(manifest, "build_stats", "manifest");
        b.stats.documents_processed = stats.at("documents_processed").get<std::uint64_t>();
        b.stats.documents_skipped = stats.at("documents_skipped").get<std::uint64_t>();
        b.stats.matched_spans = stats.at("matched_spans").get<std::uint64_t>();
        b.stats.distinct_edges = stats.at("distinct_edges").get<std::uint64_t>();
    } catch (const ConfigError& e) {
        corrupt("manifest", e.what());
    } catch (const nlohmann::json::exception& e) {
        corrupt("manifest", e.what());
    }

    const std::string matrix = read_file(dir, index_files::kMatrix, "matrix");
    check_file(files, "matrix", matrix, true);
    std::size_t line_no = 0;
    for (auto line : lines_of(matrix, "matrix")) {
        ++line_no;
        const auto f = fields_of(line);
        std::uint32_t row = 0, col = 0;
        double score = 0;
        if (f.size() != 3 || !parse_number(f[0], row) || !parse_number(f[1], col) || !parse_number(f[2], score)) {
            corrupt("matrix", "line " + std::to_string(line_no) + " is malformed");
        }
        if (row < 1 || col < 1 || row > b.fmap.size() || col > b.fmap.size()) {
            corrupt("matrix", "line " + std::to_string(line_no) + " index out of range");
        }
        if (!std::isfinite(score) || score <= 0) corrupt("matrix", "line " + std::to_string(line_no) + " bad score");
        if (b.matrix.get(row, col) != 0.0) corrupt("matrix", "line " + std::to_string(line_no) + " duplicate entry");
        b.matrix.add(row, col, score);
    }

    const std::string evidence = read_file(dir, index_files::kEvidence, "evidence");
    check_file(files, "evidence", evidence, true);
    line_no = 0;
    for (auto line : lines_of(evidence, "evidence")) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no);
        const auto f = fields_of(line);
        if (f.size() != 5 && f.size() != 6) corrupt("evidence", where + " has wrong field count");
        ConceptId a{std::string(f[0])}, bb{std::string(f[1])};
        if (!(a < bb) || !dict.contains(a) || !dict.contains(bb)) corrupt("evidence", where + " bad concept pair");
        Posting p;
        p.doc_id = std::string(f[2]);
        if (!parse_number(f[3], p.pub_year)) corrupt("evidence", where + " bad year");
        auto kind = parse_source_kind(f[4]);
        if (!kind) corrupt("evidence", where + " bad source kind");
        p.source_kind = *kind;
        if (f.size() == 6) p.subject_concept = ConceptId(std::string(f[5]));
        if (p.subject_concept.has_value() != (p.source_kind == SourceKind::Encyclopedia)) {
            corrupt("evidence", where + " subject does not match source kind");
        }
        if (!b.evidence.add(a, bb, p)) corrupt("evidence", where + " duplicate posting");
    }

    const std::string documents = read_file(dir, index_files::kDocuments, "documents");
    check_file(files, "documents", documents, true);
    line_no = 0;
    for (auto line : lines_of(documents, "documents")) {
        ++line_no;
        try {
            const auto j = ojson::parse(line);
            DocumentMeta d;
            d.doc_id = j.at("doc_id").get<std::string>();
            auto kind = parse_source_kind(j.at("source_kind").get<std::string>());
            if (!kind) throw std::invalid_argument("bad source kind");
            d.source_kind = *kind;
            d.title = j.at("title").get<std::string>();
            d.pub_date = j.at("pub_date").get<std::string>();
            if (!j.at("url").is_null()) d.url = j.at("url").get<std::string>();
            if (!j.at("subject_concept").is_null()) d.subject_concept = ConceptId(j.at("subject_concept").get<std::string>());
            if (!b.documents.emplace(d.doc_id, d).second) throw std::invalid_argument("duplicate doc_id");
        } catch (const std::exception& e) {
            corrupt("documents", "line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    if (b.stats.distinct_edges != b.evidence.edge_count()) corrupt("manifest", "distinct_edges disagrees with evidence");
    return b;
}

IndexBundle merge_incremental(const IndexBundle& base, const IndexBundle& delta) {
    if (base.dictionary_checksum() != delta.dictionary_checksum()) {
        throw StoreError(StoreError::Kind::IncompatibleIndexes, "dictionary checksum differs");
    }
    if (!(base.weights == delta.weights)) {
        throw StoreError(StoreError::Kind::IncompatibleIndexes, "weight config differs");
    }
    for (const auto& [doc_id, meta] : delta.documents) {
        if (base.documents.contains(doc_id)) {
            throw StoreError(StoreError::Kind::IncompatibleIndexes, "document " + doc_id + " present in both");
        }
    }

    IndexBundle out = base;
    out.matrix.merge_from(delta.matrix);
    out.evidence.merge_from(delta.evidence);
    out.documents.insert(delta.documents.begin(), delta.documents.end());
    out.stats.documents_processed += delta.stats.documents_processed;
    out.stats.documents_skipped += delta.stats.documents_skipped;
    out.stats.matched_spans += delta.stats.matched_spans;
    out.stats.distinct_edges = out.evidence.edge_count();
    return out;
}

}  // namespace coocnet

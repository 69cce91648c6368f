#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "coocnet/cooc.hpp"
#include "coocnet/ontology.hpp"

namespace coocnet {

inline constexpr int kFormatVersion = 1;

/// A finished index plus everything needed to serve it: the vocabulary it
/// was built from travels with it.
struct IndexBundle {
    int format_version = kFormatVersion;
    std::shared_ptr<const Dictionary> dictionary;
    WeightConfig weights;
    ConceptIndexMap fmap;
    CooccurrenceMatrix matrix;
    EdgeEvidence evidence;
    BuildStats stats;
    DocumentCatalog documents;

    const std::string& dictionary_checksum() const { return dictionary->checksum(); }

    bool operator==(const IndexBundle& other) const;
};

IndexBundle make_bundle(std::shared_ptr<const Dictionary> dict, const WeightConfig& weights, BuildResult built);

/// File names inside an index directory.
namespace index_files {
inline constexpr const char* kManifest = "manifest.json";
inline constexpr const char* kMatrix = "matrix.txt";
inline constexpr const char* kEvidence = "evidence.txt";
inline constexpr const char* kDocuments = "documents.jsonl";
inline constexpr const char* kDictionary = "dictionary.jsonl";
}  // namespace index_files

/// Writes the bundle canonically: equal bundles produce byte-identical
/// directories. Creates `dir` if needed.
void save_index(const IndexBundle& bundle, const std::filesystem::path& dir);

/// Loads and validates every file against the manifest. Errors name the
/// logical file ("manifest", "matrix", "evidence", "documents", "dictionary").
IndexBundle load_index(const std::filesystem::path& dir);

/// Adds a batch index built from a disjoint set of documents onto `base`.
/// Both must share dictionary and weights.
IndexBundle merge_incremental(const IndexBundle& base, const IndexBundle& delta);

}  // namespace coocnet

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coocnet/ontology.hpp"
#include "coocnet/query.hpp"

namespace coocnet {

enum class NodeKind { Root, Category, Leaf };
std::string_view to_string(NodeKind kind);

inline constexpr const char* kUnclassifiedLabel = "Unclassified";
inline constexpr const char* kUnclassifiedKey = "unclassified";

struct TreeNode {
    NodeKind kind = NodeKind::Leaf;
    std::string label;
    /// Concept id for root and leaves; tree-number prefix for categories.
    std::string id;
    std::uint64_t weight = 0;
    bool collapsed = false;
    std::optional<SourceColor> color;
    /// Relatedness, carried on leaves for ordering.
    double score = 0;
    std::vector<TreeNode> children;

    bool operator==(const TreeNode&) const = default;
};

struct ResultTree {
    TreeNode root;

    bool operator==(const ResultTree&) const = default;
};

/// research_count plus one for a qualifying encyclopedia page.
std::uint64_t leaf_weight(const NeighborEntry& entry);

/// Groups leaves under category chains named after their tree-number
/// prefixes, excises single-child categories, then collapses every
/// category. Throws UnknownConcept.
ResultTree build_hierarchy(const ConceptId& query_id, const std::vector<NeighborEntry>& entries,
                           const Dictionary& dict);

/// Replaces every category holding exactly one child by that child until
/// none is left. The root is never removed. Category and root weights are
/// recomputed from the leaves.
ResultTree excise_single_children(ResultTree tree);

/// All leaves directly under the root.
ResultTree flat_view(const ConceptId& query_id, const std::vector<NeighborEntry>& entries, const Dictionary& dict);

/// Sets every non-leaf weight to the sum of its descendant leaf weights.
std::uint64_t recompute_weights(TreeNode& node);

/// Leaves in depth-first order.
std::vector<const TreeNode*> collect_leaves(const TreeNode& node);

}  // namespace coocnet

#include "coocnet/treeviz.hpp"

#include <algorithm>

namespace coocnet {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Root: return "root";
        case NodeKind::Category: return "category";
        case NodeKind::Leaf: return "leaf";
    }
    return "leaf";
}

std::uint64_t leaf_weight(const NeighborEntry& entry) {
    return entry.research_count + (entry.encyclopedia_hit ? 1 : 0);
}

namespace {

TreeNode make_root(const ConceptId& query_id, const Dictionary& dict) {
    TreeNode root;
    root.kind = NodeKind::Root;
    root.id = query_id.value;
    root.label = dict.at(query_id).preferred_term;
    return root;
}

TreeNode make_leaf(const NeighborEntry& entry, const Concept& con) {
    TreeNode leaf;
    leaf.kind = NodeKind::Leaf;
    leaf.id = entry.concept_id.value;
    leaf.label = con.preferred_term;
    leaf.weight = leaf_weight(entry);
    leaf.color = entry.source_color;
    leaf.score = entry.score;
    return leaf;
}

// Proper prefixes of a tree number: "C18.654.521" -> {"C18", "C18.654"}.
std::vector<std::string> proper_prefixes(const std::string& tree_number) {
    std::vector<std::string> out;
    for (std::size_t pos = tree_number.find('.'); pos != std::string::npos; pos = tree_number.find('.', pos + 1)) {
        out.push_back(tree_number.substr(0, pos));
    }
    return out;
}

TreeNode& category_child(TreeNode& parent, const std::string& key, const std::string& label) {
    for (auto& child : parent.children) {
        if (child.kind == NodeKind::Category && child.id == key) return child;
    }
    TreeNode cat;
    cat.kind = NodeKind::Category;
    cat.id = key;
    cat.label = label;
    parent.children.push_back(std::move(cat));
    return parent.children.back();
}

bool child_order(const TreeNode& a, const TreeNode& b) {
    const bool ac = a.kind == NodeKind::Category;
    const bool bc = b.kind == NodeKind::Category;
    if (ac != bc) return ac;
    if (ac) return std::tie(a.label, a.id) < std::tie(b.label, b.id);
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
}

void sort_children(TreeNode& node) {
    std::sort(node.children.begin(), node.children.end(), child_order);
    for (auto& c : node.children) sort_children(c);
}

void excise(TreeNode& node) {
    for (auto& child : node.children) {
        excise(child);
        // The child's subtree is already free of single-child categories, so
        // one replacement settles this slot.
        if (child.kind == NodeKind::Category && child.children.size() == 1) {
            TreeNode only = std::move(child.children.front());
            child = std::move(only);
        }
    }
}

void set_collapsed(TreeNode& node, int depth) {
    if (node.kind == NodeKind::Category) node.collapsed = depth >= 1;
    for (auto& c : node.children) set_collapsed(c, depth + 1);
}

void collect(const TreeNode& node, std::vector<const TreeNode*>& out) {
    if (node.kind == NodeKind::Leaf) out.push_back(&node);
    for (const auto& c : node.children) collect(c, out);
}

}  // namespace

std::uint64_t recompute_weights(TreeNode& node) {
    if (node.kind == NodeKind::Leaf) return node.weight;
    std::uint64_t sum = 0;
    for (auto& c : node.children) sum += recompute_weights(c);
    node.weight = sum;
    return sum;
}

std::vector<const TreeNode*> collect_leaves(const TreeNode& node) {
    std::vector<const TreeNode*> out;
    collect(node, out);
    return out;
}

ResultTree excise_single_children(ResultTree tree) {
    excise(tree.root);
    recompute_weights(tree.root);
    return tree;
}

ResultTree build_hierarchy(const ConceptId& query_id, const std::vector<NeighborEntry>& entries,
                           const Dictionary& dict) {
    ResultTree tree{make_root(query_id, dict)};
    for (const auto& entry : entries) {
        const Concept& con = dict.at(entry.concept_id);
        TreeNode* parent = &tree.root;
        if (auto tn = con.grouping_tree_number()) {
            for (const auto& prefix : proper_prefixes(*tn)) {
                parent = &category_child(*parent, prefix, category_name(dict, prefix));
            }
        } else {
            parent = &category_child(*parent, kUnclassifiedKey, kUnclassifiedLabel);
        }
        parent->children.push_back(make_leaf(entry, con));
    }
    tree = excise_single_children(std::move(tree));
    sort_children(tree.root);
    set_collapsed(tree.root, 0);
    return tree;
}

ResultTree flat_view(const ConceptId& query_id, const std::vector<NeighborEntry>& entries, const Dictionary& dict) {
    ResultTree tree{make_root(query_id, dict)};
    for (const auto& entry : entries) tree.root.children.push_back(make_leaf(entry, dict.at(entry.concept_id)));
    sort_children(tree.root);
    recompute_weights(tree.root);
    return tree;
}

}  // namespace coocnet

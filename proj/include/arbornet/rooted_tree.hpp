#pragma once

#include <string>
#include <vector>

namespace arbornet {

/// Rooted tree with labels on its leaves. Polytomies are allowed, but no
/// vertex ever has exactly one child (degree-2 suppression is maintained by
/// every producer). Children are ordered by smallest descendant label and
/// nodes are numbered in preorder, so equal trees compare equal memberwise.
struct RootedTree {
    struct Node {
        std::vector<int> children;  // empty for leaves
        std::string label;          // nonempty exactly on leaves

        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes;
    int root = -1;

    bool is_leaf(int v) const { return nodes[v].children.empty(); }
    int leaf_count() const;
    std::vector<std::string> leaf_labels() const;          // sorted
    std::vector<std::string> labels_below(int v) const;    // sorted

    // Parenthesized form, e.g. "((2,3),4)"; deterministic.
    std::string to_string() const;

    // Reorders children by smallest descendant label and renumbers nodes in
    // preorder. Producers call this before handing a tree out.
    RootedTree canonicalized() const;

    bool operator==(const RootedTree&) const = default;
};

class Network;

// Views a rooted tree as a 1-rooted network (root out-degree left as is).
// Leaf vertices are named by their labels; interior names are generated.
// Requires at least two leaves.
Network tree_as_network(const RootedTree& tree);

}  // namespace arbornet

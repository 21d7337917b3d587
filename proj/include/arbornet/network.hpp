#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbornet/rooted_tree.hpp"

namespace arbornet {

using LeafLabel = std::string;
using VertexId = std::string;

// Tokens (vertex names, leaf labels) are nonempty strings over [A-Za-z0-9_].
bool is_valid_token(const std::string& s);

enum class VertexClass { Root, Leaf, TreeVertex, Hybrid, Invalid };

const char* to_string(VertexClass c);

struct Violation {
    VertexId vertex;   // empty for network-level rules
    std::string rule;
};

struct ValidityReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Multi-rooted directed graph with leaf labels. Construction enforces the
/// structural invariants (simple, acyclic, labels injective and only on
/// in-degree-1 sinks); the m-network degree rules, |X| >= 3 and connectivity
/// are reported by validate_m_network instead.
///
/// Vertices are indexed 0..n-1 in lexicographic name order, which makes
/// every iteration in the library deterministic.
class Network {
public:
    using Arc = std::pair<VertexId, VertexId>;
    using LabelRecord = std::pair<VertexId, LeafLabel>;

    Network() = default;
    static Network from_arcs(const std::vector<Arc>& arcs,
                             const std::vector<LabelRecord>& labels);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int arc_count() const { return arc_count_; }

    const VertexId& name(int v) const { return names_[v]; }
    int index_of(const VertexId& name) const;   // throws on unknown vertex
    bool has_vertex(const VertexId& name) const;

    const std::vector<int>& children(int v) const { return children_[v]; }
    const std::vector<int>& parents(int v) const { return parents_[v]; }
    int in_degree(int v) const { return static_cast<int>(parents_[v].size()); }
    int out_degree(int v) const { return static_cast<int>(children_[v].size()); }
    bool has_arc(int tail, int head) const;

    bool is_labeled(int v) const { return !labels_[v].empty(); }
    const LeafLabel& label(int v) const { return labels_[v]; }
    int vertex_of_label(const LeafLabel& l) const;   // -1 if absent

    std::vector<LeafLabel> leaf_labels() const;      // sorted; the set X
    std::vector<int> roots() const;                  // in-degree 0, ascending
    std::vector<Arc> arcs() const;                   // canonical order
    std::vector<LabelRecord> label_records() const;  // sorted by vertex name

    bool operator==(const Network&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> parents_;
    std::vector<LeafLabel> labels_;
    int arc_count_ = 0;
};

/// U(N): the arcs with directions dropped. Vertex indices are local to the
/// view (lexicographic name order again).
struct UndirectedView {
    std::vector<std::string> names;
    std::vector<LeafLabel> labels;             // "" if none
    std::vector<std::pair<int, int>> edges;    // i < j, sorted, unique
    std::vector<std::vector<int>> adjacency;

    int vertex_count() const { return static_cast<int>(names.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    static UndirectedView make(std::vector<std::string> names,
                               std::vector<LeafLabel> labels,
                               std::vector<std::pair<int, int>> edges);
};

VertexClass classify(const Network& net, int v);
VertexClass classify(const Network& net, const VertexId& v);

// Reports every violated m-network rule; ok iff none.
ValidityReport validate_m_network(const Network& net);

UndirectedView underlying_graph(const Network& net);

// U(N)^-: repeatedly replaces unlabeled degree-2 vertices by an edge joining
// their neighbors. Returns nullopt when a replacement would create a
// self-loop or a duplicate edge (non-simple result).
std::optional<UndirectedView> suppress_degree_two(const UndirectedView& view);

bool is_arboreal(const Network& net);
bool is_stack_free(const Network& net);
bool is_banyan(const Network& net);

std::vector<LeafLabel> leaves_below(const Network& net, int v);
std::vector<LeafLabel> leaves_below(const Network& net, const VertexId& v);

// N_r for a root r: the reachable sub-DAG as a rooted tree with out-degree-1
// chains suppressed. Throws if the sub-DAG is not a tree (non-arboreal input).
RootedTree descendant_tree(const Network& net, int r);
RootedTree descendant_tree(const Network& net, const VertexId& r);

// Ordered pairs (a,b): b is the child of a hybrid that shares a parent with
// leaf a.
std::vector<std::pair<LeafLabel, LeafLabel>> reticulated_cherries(const Network& net);

// Leaf sets of interior vertices all of whose out-arcs point at leaves.
std::vector<std::vector<LeafLabel>> generalized_cherries(const Network& net);

}  // namespace arbornet

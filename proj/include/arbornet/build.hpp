#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arbornet/encoding.hpp"
#include "arbornet/rooted_tree.hpp"

namespace arbornet {

/// Undirected graph on a leaf set; one edge per triplet cherry whose three
/// leaves all lie inside the set.
struct LeafGraph {
    std::vector<LeafLabel> leaves;                // sorted
    std::vector<std::pair<int, int>> edges;       // i < j, sorted, unique

    // Connected components as leaf sets, ordered by smallest member.
    std::vector<std::vector<LeafLabel>> components() const;
};

LeafGraph cluster_graph(const TripletSystem& sys,
                        const std::vector<LeafLabel>& leaves);

struct BuildOutcome {
    std::optional<RootedTree> tree;
    std::vector<LeafLabel> connected_at;   // set where the cluster graph
                                           // stayed connected (failure only)
    bool ok() const { return tree.has_value(); }
};

// BUILD: recursively splits `leaves` along cluster-graph components, allowing
// polytomies. Triplets mentioning labels outside `leaves` are ignored.
// Throws on an empty leaf set.
BuildOutcome build(const TripletSystem& sys,
                   const std::vector<LeafLabel>& leaves);

}  // namespace arbornet

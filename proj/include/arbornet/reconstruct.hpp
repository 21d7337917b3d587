#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arbornet/build.hpp"
#include "arbornet/encoding.hpp"
#include "arbornet/network.hpp"

namespace arbornet {

/// Blocks of the (D,R)-induced partition: duet endpoints separated, every
/// triplet's leaf set inside one block. Blocks are sorted leaf sets, ordered
/// by smallest member.
struct Partition {
    std::vector<std::vector<LeafLabel>> blocks;

    int block_of(const LeafLabel& l) const;   // -1 if absent
};

// Queue-closure procedure: one closure per duet endpoint through triplets
// sharing a leaf; untouched leaves form one residual block. nullopt when a
// duet's endpoints land in the same closure. Throws on empty support.
std::optional<Partition> dr_partition(const TripletSystem& r,
                                      const DuetSystem& d);

enum class RootEdgeKind { duet, triplet };

/// An edge of the scaffold: one root of the envisaged network. Endpoints are
/// global component ids; near/far hold cherry leaves and outgroups per
/// orientation (for a duet edge, near sets are the two duet leaves).
struct RootEdge {
    int id = -1;
    RootEdgeKind kind = RootEdgeKind::triplet;
    int comp_a = -1, comp_b = -1;              // comp_a < comp_b
    std::vector<LeafLabel> near_a, near_b;
    std::vector<LeafLabel> far_a, far_b;

    std::vector<LeafLabel> leaf_span() const;  // near ∪ far, sorted
};

struct ComponentGraph {
    Partition partition;
    std::vector<std::vector<LeafLabel>> comps;   // global ids, ordered by
                                                 // (block, smallest leaf)
    std::vector<int> comp_block;                 // block id per component
    std::vector<std::vector<int>> block_comps;   // per block -> component ids
    std::vector<RootEdge> edges;
    std::map<LeafLabel, std::vector<int>> anc;   // leaf -> ids of edges whose
                                                 // near set contains it
};

// Builds per-block cherry graphs and the root edges. nullopt when a block's
// cherry graph is connected with more than one leaf, or when the graph on all
// components is not a tree.
std::optional<ComponentGraph> scaffold(const TripletSystem& r,
                                       const DuetSystem& d,
                                       const Partition& p);

/// Graph whose vertices carry leaf sets; used for fidelity checks between the
/// scaffold output and the component graph read off a network.
struct LeafSetGraph {
    std::vector<std::vector<LeafLabel>> comps;   // sorted sets, sorted
    std::vector<std::pair<int, int>> edges;      // comp id pairs, sorted

    bool operator==(const LeafSetGraph&) const = default;
};

// G(N): delete every degree-2 vertex of U(N); components become leaf-set
// classes, each deleted vertex an edge between the two touched components.
LeafSetGraph component_graph_of(const Network& net);

LeafSetGraph as_leaf_set_graph(const ComponentGraph& cg);

// Runs BUILD per root edge on its leaf span, requires every tree root to have
// out-degree 2, merges identical clusters across trees (key: block id +
// descendant leaf set) and caps multi-parented clusters with one hybrid.
std::optional<Network> refine_and_assemble(const ComponentGraph& cg,
                                           const TripletSystem& r);

// The full pipeline: partition, scaffold, refine, then verification by
// re-extraction. Returns a network with R(N) = r and D(N) = d, or nullopt.
// Throws when |L(r) ∪ L(d)| < 3.
std::optional<Network> ara(const TripletSystem& r, const DuetSystem& d);

}  // namespace arbornet

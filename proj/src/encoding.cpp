#include "arbornet/encoding.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace arbornet {

Triplet Triplet::make(LeafLabel x, LeafLabel y, LeafLabel z) {
    if (x == y || x == z || y == z)
        throw std::invalid_argument("triplet leaves must be pairwise distinct");
    if (y < x) std::swap(x, y);
    return Triplet{std::move(x), std::move(y), std::move(z)};
}

std::vector<LeafLabel> Triplet::leaf_set() const {
    std::vector<LeafLabel> out{a, b, c};
    std::sort(out.begin(), out.end());
    return out;
}

Duet Duet::make(LeafLabel x, LeafLabel y) {
    if (x == y) throw std::invalid_argument("duet leaves must be distinct");
    if (y < x) std::swap(x, y);
    return Duet{std::move(x), std::move(y)};
}

TripletSystem::TripletSystem(std::vector<Triplet> triplets)
    : triplets_(std::move(triplets)) {
    std::sort(triplets_.begin(), triplets_.end());
    triplets_.erase(std::unique(triplets_.begin(), triplets_.end()), triplets_.end());
}

bool TripletSystem::contains(const Triplet& t) const {
    return std::binary_search(triplets_.begin(), triplets_.end(), t);
}

std::vector<LeafLabel> TripletSystem::support() const {
    std::vector<LeafLabel> out;
    for (const Triplet& t : triplets_) {
        out.push_back(t.a);
        out.push_back(t.b);
        out.push_back(t.c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DuetSystem::DuetSystem(std::vector<Duet> duets) : duets_(std::move(duets)) {
    std::sort(duets_.begin(), duets_.end());
    duets_.erase(std::unique(duets_.begin(), duets_.end()), duets_.end());
}

bool DuetSystem::contains(const Duet& d) const {
    return std::binary_search(duets_.begin(), duets_.end(), d);
}

std::vector<LeafLabel> DuetSystem::support() const {
    std::vector<LeafLabel> out;
    for (const Duet& d : duets_) {
        out.push_back(d.a);
        out.push_back(d.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Triplet extraction works on interned leaf indices; strings only at the rim.
struct LeafInterner {
    std::vector<LeafLabel> labels;   // sorted

    explicit LeafInterner(const Network& net) : labels(net.leaf_labels()) {}

    int id(const LeafLabel& l) const {
        return static_cast<int>(
            std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    }
};

void triplets_of_root(const Network& net, int root, const LeafInterner& interner,
                      std::vector<std::array<int, 3>>& out) {
    RootedTree tree = descendant_tree(net, root);
    int n = static_cast<int>(tree.nodes.size());

    // sorted leaf-id set per node, bottom-up
    std::vector<std::vector<int>> below(n);
    std::function<void(int)> fill = [&](int v) {
        if (tree.nodes[v].children.empty()) {
            below[v] = {interner.id(tree.nodes[v].label)};
            return;
        }
        for (int c : tree.nodes[v].children) {
            fill(c);
            std::vector<int> merged;
            std::set_union(below[v].begin(), below[v].end(), below[c].begin(),
                           below[c].end(), std::back_inserter(merged));
            below[v] = std::move(merged);
        }
    };
    fill(tree.root);
    const std::vector<int>& all = below[tree.root];

    for (int v = 0; v < n; ++v) {
        if (tree.nodes[v].children.empty()) continue;
        std::vector<int> outgroups;
        std::set_difference(all.begin(), all.end(), below[v].begin(), below[v].end(),
                            std::back_inserter(outgroups));
        if (outgroups.empty()) continue;
        const std::vector<int>& kids = tree.nodes[v].children;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            for (std::size_t j = i + 1; j < kids.size(); ++j) {
                for (int x : below[kids[i]]) {
                    for (int y : below[kids[j]]) {
                        int lo = std::min(x, y), hi = std::max(x, y);
                        for (int z : outgroups) out.push_back({lo, hi, z});
                    }
                }
            }
        }
    }
}

}  // namespace

TripletSystem induced_triplets(const Network& net) {
    if (!is_arboreal(net))
        throw std::invalid_argument("induced_triplets: network is not arboreal");

    LeafInterner interner(net);
    std::vector<std::array<int, 3>> acc;
    for (int r : net.roots()) {
        std::vector<std::array<int, 3>> mine;
        triplets_of_root(net, r, interner, mine);
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        if (acc.empty()) {
            acc = std::move(mine);
        } else {
            std::vector<std::array<int, 3>> merged;
            std::set_union(acc.begin(), acc.end(), mine.begin(), mine.end(),
                           std::back_inserter(merged));
            acc = std::move(merged);
        }
    }

    std::vector<Triplet> out;
    out.reserve(acc.size());
    for (const auto& t : acc)
        out.push_back(Triplet{interner.labels[t[0]], interner.labels[t[1]],
                              interner.labels[t[2]]});
    return TripletSystem(std::move(out));
}

namespace {

// sorted leaf pairs covered by some triplet
std::vector<std::pair<LeafLabel, LeafLabel>> covered_pairs(const TripletSystem& r) {
    std::vector<std::pair<LeafLabel, LeafLabel>> pairs;
    pairs.reserve(r.size() * 3);
    for (const Triplet& t : r.members()) {
        pairs.emplace_back(t.a, t.b);
        pairs.emplace_back(std::min(t.a, t.c), std::max(t.a, t.c));
        pairs.emplace_back(std::min(t.b, t.c), std::max(t.b, t.c));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

std::vector<std::pair<Duet, VertexId>> chain_witnesses(const Network& net,
                                                       const TripletSystem& triplets) {
    auto pairs = covered_pairs(triplets);
    auto covered = [&](const LeafLabel& x, const LeafLabel& y) {
        std::pair<LeafLabel, LeafLabel> key{std::min(x, y), std::max(x, y)};
        return std::binary_search(pairs.begin(), pairs.end(), key);
    };

    // a duet's witness root sees a single leaf through each of its children:
    // every vertex on the way down has out-degree 1 (a leaf child is the
    // length-0 chain)
    auto resolve = [&](int v) {
        while (net.out_degree(v) == 1) v = net.children(v)[0];
        return v;
    };
    std::vector<std::pair<Duet, VertexId>> out;
    for (int r : net.roots()) {
        if (net.out_degree(r) != 2) continue;
        int x = resolve(net.children(r)[0]);
        int y = resolve(net.children(r)[1]);
        if (!net.is_labeled(x) || !net.is_labeled(y)) continue;
        if (x == y || covered(net.label(x), net.label(y))) continue;
        out.emplace_back(Duet::make(net.label(x), net.label(y)), net.name(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DuetSystem literal_path_duets(const Network& net, const TripletSystem& triplets) {
    auto pairs = covered_pairs(triplets);
    UndirectedView u = underlying_graph(net);

    std::vector<int> leaf_vertices;
    for (int v = 0; v < u.vertex_count(); ++v)
        if (!u.labels[v].empty()) leaf_vertices.push_back(v);

    std::vector<Duet> out;
    for (std::size_t i = 0; i < leaf_vertices.size(); ++i) {
        // BFS tree from leaf i; U(N) of an arboreal network is a tree, so
        // parent pointers give the unique path to every other leaf
        int src = leaf_vertices[i];
        std::vector<int> parent(u.vertex_count(), -2);
        parent[src] = -1;
        std::vector<int> queue{src};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int w = queue[q];
            for (int nb : u.adjacency[w]) {
                if (parent[nb] == -2) {
                    parent[nb] = w;
                    queue.push_back(nb);
                }
            }
        }
        for (std::size_t j = i + 1; j < leaf_vertices.size(); ++j) {
            int dst = leaf_vertices[j];
            if (parent[dst] == -2) continue;
            int degree_two = 0;
            for (int w = parent[dst]; w != -1 && w != src; w = parent[w])
                if (u.degree(w) == 2) ++degree_two;
            if (degree_two != 1) continue;
            const LeafLabel& x = u.labels[src];
            const LeafLabel& y = u.labels[dst];
            std::pair<LeafLabel, LeafLabel> key{std::min(x, y), std::max(x, y)};
            if (std::binary_search(pairs.begin(), pairs.end(), key)) continue;
            out.push_back(Duet::make(x, y));
        }
    }
    return DuetSystem(std::move(out));
}

}  // namespace

DuetSystem induced_duets(const Network& net, DuetMode mode,
                         const TripletSystem& triplets) {
    if (!is_arboreal(net))
        throw std::invalid_argument("induced_duets: network is not arboreal");
    if (mode == DuetMode::literal_path) return literal_path_duets(net, triplets);
    std::vector<Duet> out;
    for (auto& [duet, root] : chain_witnesses(net, triplets)) out.push_back(duet);
    return DuetSystem(std::move(out));
}

DuetSystem induced_duets(const Network& net, DuetMode mode) {
    return induced_duets(net, mode, induced_triplets(net));
}

std::vector<std::pair<Duet, VertexId>> duet_root_witnesses(const Network& net) {
    if (!is_arboreal(net))
        throw std::invalid_argument("duet_root_witnesses: network is not arboreal");
    return chain_witnesses(net, induced_triplets(net));
}

TripletSystem restrict_triplets(const TripletSystem& sys,
                                const std::vector<LeafLabel>& keep) {
    std::vector<LeafLabel> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    auto in = [&](const LeafLabel& l) {
        return std::binary_search(sorted.begin(), sorted.end(), l);
    };
    std::vector<Triplet> out;
    for (const Triplet& t : sys.members())
        if (in(t.a) && in(t.b) && in(t.c)) out.push_back(t);
    return TripletSystem(std::move(out));
}

std::vector<LeafLabel> support(const TripletSystem& r, const DuetSystem& d) {
    std::vector<LeafLabel> lr = r.support();
    std::vector<LeafLabel> ld = d.support();
    std::vector<LeafLabel> out;
    std::set_union(lr.begin(), lr.end(), ld.begin(), ld.end(),
                   std::back_inserter(out));
    return out;
}

}  // namespace arbornet

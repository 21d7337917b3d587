#include "arbornet/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace arbornet {

namespace {

std::vector<LeafLabel> sorted_unique(std::vector<LeafLabel> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct Interner {
    std::vector<LeafLabel> labels;   // sorted

    explicit Interner(std::vector<LeafLabel> sorted) : labels(std::move(sorted)) {}

    int id(const LeafLabel& l) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), l);
        return (it != labels.end() && *it == l)
                   ? static_cast<int>(it - labels.begin())
                   : -1;
    }
    int size() const { return static_cast<int>(labels.size()); }
};

}  // namespace

int Partition::block_of(const LeafLabel& l) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), l))
            return static_cast<int>(b);
    return -1;
}

std::optional<Partition> dr_partition(const TripletSystem& r, const DuetSystem& d) {
    std::vector<LeafLabel> x = support(r, d);
    if (x.empty())
        throw std::invalid_argument("dr_partition: empty support");
    Interner in(x);

    // lookup tables from the closure procedure
    std::vector<std::vector<int>> belong(in.size());   // leaf -> triplet ids
    for (int t = 0; t < static_cast<int>(r.size()); ++t) {
        const Triplet& trip = r.members()[t];
        belong[in.id(trip.a)].push_back(t);
        belong[in.id(trip.b)].push_back(t);
        belong[in.id(trip.c)].push_back(t);
    }
    std::vector<char> unused(r.size(), 1);
    std::vector<int> which(in.size(), -1);

    int next_block = 0;
    auto close = [&](int seed) {
        if (which[seed] != -1) return;
        int bid = next_block++;
        std::vector<int> queue{seed};
        which[seed] = bid;
        while (!queue.empty()) {
            int l = queue.back();
            queue.pop_back();
            for (int t : belong[l]) {
                if (!unused[t]) continue;
                unused[t] = 0;
                const Triplet& trip = r.members()[t];
                for (const LeafLabel* lab : {&trip.a, &trip.b, &trip.c}) {
                    int m = in.id(*lab);
                    if (which[m] == -1) {
                        which[m] = bid;
                        queue.push_back(m);
                    }
                }
            }
        }
    };

    for (const Duet& duet : d.members()) {
        close(in.id(duet.a));
        close(in.id(duet.b));
    }
    for (const Duet& duet : d.members())
        if (which[in.id(duet.a)] == which[in.id(duet.b)]) return std::nullopt;

    int residual = next_block;
    bool have_residual = false;
    for (int l = 0; l < in.size(); ++l) {
        if (which[l] == -1) {
            which[l] = residual;
            have_residual = true;
        }
    }
    int block_count = next_block + (have_residual ? 1 : 0);

    std::vector<std::vector<LeafLabel>> blocks(block_count);
    for (int l = 0; l < in.size(); ++l) blocks[which[l]].push_back(in.labels[l]);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition{std::move(blocks)};
}

std::vector<LeafLabel> RootEdge::leaf_span() const {
    std::vector<LeafLabel> out = near_a;
    out.insert(out.end(), near_b.begin(), near_b.end());
    out.insert(out.end(), far_a.begin(), far_a.end());
    out.insert(out.end(), far_b.begin(), far_b.end());
    return sorted_unique(std::move(out));
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) { parent[find(y)] = find(x); }
};

bool graph_is_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    if (static_cast<int>(edges.size()) != n - 1) return false;
    UnionFind uf(n);
    for (const auto& e : edges) {
        if (uf.find(e.first) == uf.find(e.second)) return false;
        uf.unite(e.first, e.second);
    }
    return true;
}

}  // namespace

std::optional<ComponentGraph> scaffold(const TripletSystem& r, const DuetSystem& d,
                                       const Partition& p) {
    std::vector<LeafLabel> x;
    for (const auto& block : p.blocks) x.insert(x.end(), block.begin(), block.end());
    x = sorted_unique(std::move(x));
    Interner in(x);

    std::vector<int> block_of(in.size(), -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (const LeafLabel& l : p.blocks[b])
            block_of[in.id(l)] = static_cast<int>(b);

    for (const Triplet& t : r.members()) {
        int ba = block_of[in.id(t.a)];
        if (ba != block_of[in.id(t.b)] || ba != block_of[in.id(t.c)])
            throw std::invalid_argument("scaffold: partition splits a triplet");
    }
    for (const Duet& duet : d.members())
        if (block_of[in.id(duet.a)] == block_of[in.id(duet.b)])
            throw std::invalid_argument("scaffold: partition keeps a duet together");

    // per-block cherry graphs; components found with union-find over leaves
    UnionFind uf(in.size());
    for (const Triplet& t : r.members()) uf.unite(in.id(t.a), in.id(t.b));

    ComponentGraph cg;
    cg.partition = p;
    std::vector<int> comp_of(in.size(), -1);
    cg.block_comps.resize(p.blocks.size());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        std::map<int, std::vector<LeafLabel>> groups;   // uf root -> leaves
        for (const LeafLabel& l : p.blocks[b]) groups[uf.find(in.id(l))].push_back(l);
        if (groups.size() == 1 && p.blocks[b].size() > 1) return std::nullopt;
        std::vector<std::vector<LeafLabel>> comps;
        for (auto& [root, leaves] : groups) comps.push_back(std::move(leaves));
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& c) { return a.front() < c.front(); });
        for (auto& comp : comps) {
            int cid = static_cast<int>(cg.comps.size());
            for (const LeafLabel& l : comp) comp_of[in.id(l)] = cid;
            cg.block_comps[b].push_back(cid);
            cg.comp_block.push_back(static_cast<int>(b));
            cg.comps.push_back(std::move(comp));
        }
    }

    // duet edges first, in canonical duet order
    for (const Duet& duet : d.members()) {
        RootEdge e;
        e.kind = RootEdgeKind::duet;
        int ca = comp_of[in.id(duet.a)], cb = comp_of[in.id(duet.b)];
        if (ca < cb) {
            e.comp_a = ca;
            e.comp_b = cb;
            e.near_a = {duet.a};
            e.near_b = {duet.b};
        } else {
            e.comp_a = cb;
            e.comp_b = ca;
            e.near_a = {duet.b};
            e.near_b = {duet.a};
        }
        cg.edges.push_back(std::move(e));
    }

    // one undirected edge per crossed component pair, witness sets per
    // orientation
    std::map<std::pair<int, int>, std::size_t> edge_at;
    for (const Triplet& t : r.members()) {
        int ca = comp_of[in.id(t.a)];
        int cc = comp_of[in.id(t.c)];
        if (ca == cc) continue;
        std::pair<int, int> key{std::min(ca, cc), std::max(ca, cc)};
        auto it = edge_at.find(key);
        if (it == edge_at.end()) {
            RootEdge e;
            e.kind = RootEdgeKind::triplet;
            e.comp_a = key.first;
            e.comp_b = key.second;
            it = edge_at.emplace(key, cg.edges.size()).first;
            cg.edges.push_back(std::move(e));
        }
        RootEdge& e = cg.edges[it->second];
        bool near_is_a = (ca == e.comp_a);
        auto& near = near_is_a ? e.near_a : e.near_b;
        auto& far = near_is_a ? e.far_a : e.far_b;
        near.push_back(t.a);
        near.push_back(t.b);
        far.push_back(t.c);
    }

    std::sort(cg.edges.begin(), cg.edges.end(), [](const RootEdge& a, const RootEdge& b) {
        bool ad = a.kind == RootEdgeKind::duet, bd = b.kind == RootEdgeKind::duet;
        if (ad != bd) return ad;
        return std::tie(a.comp_a, a.comp_b, a.near_a) <
               std::tie(b.comp_a, b.comp_b, b.near_a);
    });
    for (std::size_t i = 0; i < cg.edges.size(); ++i) {
        RootEdge& e = cg.edges[i];
        e.id = static_cast<int>(i);
        e.near_a = sorted_unique(std::move(e.near_a));
        e.near_b = sorted_unique(std::move(e.near_b));
        e.far_a = sorted_unique(std::move(e.far_a));
        e.far_b = sorted_unique(std::move(e.far_b));
        for (const LeafLabel& l : e.near_a) cg.anc[l].push_back(e.id);
        for (const LeafLabel& l : e.near_b) cg.anc[l].push_back(e.id);
    }

    std::vector<std::pair<int, int>> plain;
    for (const RootEdge& e : cg.edges) plain.emplace_back(e.comp_a, e.comp_b);
    if (!graph_is_tree(static_cast<int>(cg.comps.size()), plain)) return std::nullopt;

    return cg;
}

LeafSetGraph component_graph_of(const Network& net) {
    UndirectedView u = underlying_graph(net);
    std::vector<char> deleted(u.vertex_count(), 0);
    for (int v = 0; v < u.vertex_count(); ++v)
        if (u.degree(v) == 2) deleted[v] = 1;

    std::vector<int> comp_of(u.vertex_count(), -1);
    int comp_count = 0;
    for (int v = 0; v < u.vertex_count(); ++v) {
        if (deleted[v] || comp_of[v] != -1) continue;
        int cid = comp_count++;
        std::vector<int> stack{v};
        comp_of[v] = cid;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int nb : u.adjacency[w]) {
                if (!deleted[nb] && comp_of[nb] == -1) {
                    comp_of[nb] = cid;
                    stack.push_back(nb);
                }
            }
        }
    }

    std::vector<std::vector<LeafLabel>> leaf_sets(comp_count);
    for (int v = 0; v < u.vertex_count(); ++v)
        if (!deleted[v] && !u.labels[v].empty())
            leaf_sets[comp_of[v]].push_back(u.labels[v]);
    for (auto& s : leaf_sets) std::sort(s.begin(), s.end());

    std::vector<int> order(comp_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return leaf_sets[a] < leaf_sets[b]; });
    std::vector<int> rank(comp_count);
    for (int i = 0; i < comp_count; ++i) rank[order[i]] = i;

    LeafSetGraph g;
    g.comps.resize(comp_count);
    for (int c = 0; c < comp_count; ++c) g.comps[rank[c]] = std::move(leaf_sets[c]);
    for (int v = 0; v < u.vertex_count(); ++v) {
        if (!deleted[v]) continue;
        if (u.adjacency[v].size() != 2)
            throw std::invalid_argument("component_graph_of: malformed input");
        int a = u.adjacency[v][0], b = u.adjacency[v][1];
        if (deleted[a] || deleted[b])
            throw std::invalid_argument(
                "component_graph_of: adjacent degree-2 vertices");
        int ca = rank[comp_of[a]], cb = rank[comp_of[b]];
        g.edges.emplace_back(std::min(ca, cb), std::max(ca, cb));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

LeafSetGraph as_leaf_set_graph(const ComponentGraph& cg) {
    int n = static_cast<int>(cg.comps.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cg.comps[a] < cg.comps[b]; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    LeafSetGraph g;
    g.comps.resize(n);
    for (int c = 0; c < n; ++c) g.comps[rank[c]] = cg.comps[c];
    for (const RootEdge& e : cg.edges) {
        int ca = rank[e.comp_a], cb = rank[e.comp_b];
        g.edges.emplace_back(std::min(ca, cb), std::max(ca, cb));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

// fresh names that never collide with leaf labels
struct NamePool {
    const std::vector<LeafLabel>& taken;   // sorted
    int counter = 0;

    std::string fresh(const char* prefix) {
        std::string candidate;
        do {
            candidate = prefix + std::to_string(counter++);
        } while (std::binary_search(taken.begin(), taken.end(), candidate));
        return candidate;
    }
};

}  // namespace

std::optional<Network> refine_and_assemble(const ComponentGraph& cg,
                                           const TripletSystem& r) {
    std::vector<LeafLabel> x;
    for (const auto& block : cg.partition.blocks)
        x.insert(x.end(), block.begin(), block.end());
    x = sorted_unique(std::move(x));

    // triplets grouped by block; every per-edge restriction scans one group
    std::vector<std::vector<Triplet>> by_block(cg.partition.blocks.size());
    for (const Triplet& t : r.members()) {
        int b = cg.partition.block_of(t.a);
        if (b < 0) return std::nullopt;
        by_block[b].push_back(t);
    }

    NamePool pool{x};
    std::set<std::pair<std::string, std::string>> arcs;
    std::map<std::pair<int, std::vector<LeafLabel>>, std::string> cluster_vertex;

    auto vertex_for = [&](int block, std::vector<LeafLabel> leaf_set) -> std::string {
        if (leaf_set.size() == 1) return leaf_set.front();   // the leaf itself
        auto key = std::make_pair(block, std::move(leaf_set));
        auto it = cluster_vertex.find(key);
        if (it == cluster_vertex.end())
            it = cluster_vertex.emplace(std::move(key), pool.fresh("v")).first;
        return it->second;
    };

    for (const RootEdge& e : cg.edges) {
        std::vector<LeafLabel> span = e.leaf_span();
        TripletSystem restricted;
        if (e.kind == RootEdgeKind::triplet) {
            int block = cg.comp_block[e.comp_a];
            std::vector<Triplet> inside;
            auto member = [&](const LeafLabel& l) {
                return std::binary_search(span.begin(), span.end(), l);
            };
            for (const Triplet& t : by_block[block])
                if (member(t.a) && member(t.b) && member(t.c)) inside.push_back(t);
            restricted = TripletSystem(std::move(inside));
        }

        BuildOutcome outcome = build(restricted, span);
        if (!outcome.ok()) return std::nullopt;
        const RootedTree& tree = *outcome.tree;
        if (tree.nodes[tree.root].children.size() != 2) return std::nullopt;

        int block_of_cluster =
            e.kind == RootEdgeKind::triplet ? cg.comp_block[e.comp_a] : -1;
        auto block_for_leafset = [&](const std::vector<LeafLabel>& ls) {
            // duet-edge trees are cherries: each non-root vertex is a leaf
            // whose block is its own
            return block_of_cluster >= 0 ? block_of_cluster
                                         : cg.partition.block_of(ls.front());
        };

        std::string root_name = pool.fresh("r");
        std::vector<std::string> node_vertex(tree.nodes.size());
        for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
            if (static_cast<int>(v) == tree.root) {
                node_vertex[v] = root_name;
            } else {
                std::vector<LeafLabel> ls = tree.labels_below(static_cast<int>(v));
                int block = block_for_leafset(ls);
                node_vertex[v] = vertex_for(block, std::move(ls));
            }
        }
        for (std::size_t v = 0; v < tree.nodes.size(); ++v)
            for (int c : tree.nodes[v].children)
                arcs.insert({node_vertex[v], node_vertex[c]});
    }

    // cap multi-parented clusters with a single hybrid
    std::map<std::string, std::vector<std::string>> parents_of;
    for (const auto& [tail, head] : arcs) parents_of[head].push_back(tail);
    for (const auto& [head, tails] : parents_of) {
        if (tails.size() < 2) continue;
        std::string hybrid = pool.fresh("h");
        for (const std::string& tail : tails) arcs.erase({tail, head});
        for (const std::string& tail : tails) arcs.insert({tail, hybrid});
        arcs.insert({hybrid, head});
    }

    std::vector<Network::Arc> arc_list(arcs.begin(), arcs.end());
    std::vector<Network::LabelRecord> labels;
    for (const LeafLabel& l : x) labels.emplace_back(l, l);
    try {
        return Network::from_arcs(arc_list, labels);
    } catch (const std::invalid_argument&) {
        return std::nullopt;   // inconsistent systems assembled into garbage
    }
}

std::optional<Network> ara(const TripletSystem& r, const DuetSystem& d) {
    std::vector<LeafLabel> x = support(r, d);
    if (x.size() < 3)
        throw std::invalid_argument("ara: support has fewer than 3 leaves");

    std::optional<Partition> p = dr_partition(r, d);
    if (!p) return std::nullopt;
    std::optional<ComponentGraph> cg = scaffold(r, d, *p);
    if (!cg) return std::nullopt;
    std::optional<Network> candidate = refine_and_assemble(*cg, r);
    if (!candidate) return std::nullopt;

    // verification: every intermediate check is only necessary, so compare
    // the candidate's induced systems with the input
    if (candidate->leaf_labels() != x) return std::nullopt;
    if (!validate_m_network(*candidate).ok()) return std::nullopt;
    if (!is_arboreal(*candidate) || !is_stack_free(*candidate)) return std::nullopt;
    TripletSystem rt = induced_triplets(*candidate);
    if (rt != r) return std::nullopt;
    if (induced_duets(*candidate, DuetMode::chain, rt) != d) return std::nullopt;
    return candidate;
}

}  // namespace arbornet

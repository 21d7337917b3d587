#include "arbornet/build.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace arbornet {

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
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[y] = x;
    }
};

}  // namespace

std::vector<std::vector<LeafLabel>> LeafGraph::components() const {
    UnionFind uf(static_cast<int>(leaves.size()));
    for (const auto& e : edges) uf.unite(e.first, e.second);
    std::vector<std::vector<LeafLabel>> groups(leaves.size());
    for (int i = 0; i < static_cast<int>(leaves.size()); ++i)
        groups[uf.find(i)].push_back(leaves[i]);
    std::vector<std::vector<LeafLabel>> out;
    for (auto& g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    // leaves are sorted, so each group is sorted and groups are ordered by
    // smallest member already; keep it explicit anyway
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

LeafGraph cluster_graph(const TripletSystem& sys,
                        const std::vector<LeafLabel>& leaves) {
    LeafGraph g;
    g.leaves = leaves;
    std::sort(g.leaves.begin(), g.leaves.end());
    g.leaves.erase(std::unique(g.leaves.begin(), g.leaves.end()), g.leaves.end());

    auto id = [&](const LeafLabel& l) -> int {
        auto it = std::lower_bound(g.leaves.begin(), g.leaves.end(), l);
        if (it == g.leaves.end() || *it != l) return -1;
        return static_cast<int>(it - g.leaves.begin());
    };
    for (const Triplet& t : sys.members()) {
        int a = id(t.a), b = id(t.b), c = id(t.c);
        if (a < 0 || b < 0 || c < 0) continue;
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

BuildOutcome build(const TripletSystem& sys, const std::vector<LeafLabel>& leaves) {
    if (leaves.empty())
        throw std::invalid_argument("build: empty leaf set");

    std::vector<LeafLabel> all = leaves;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int n = static_cast<int>(all.size());

    auto id = [&](const LeafLabel& l) -> int {
        auto it = std::lower_bound(all.begin(), all.end(), l);
        if (it == all.end() || *it != l) return -1;
        return static_cast<int>(it - all.begin());
    };
    std::vector<std::array<int, 3>> triples;   // (cherry, cherry, outgroup)
    for (const Triplet& t : sys.members()) {
        int a = id(t.a), b = id(t.b), c = id(t.c);
        if (a >= 0 && b >= 0 && c >= 0) triples.push_back({a, b, c});
    }

    RootedTree tree;
    BuildOutcome outcome;
    std::vector<int> comp_of(n);   // scratch, reused across levels

    // returns node id, or -1 after recording the incompatibility witness
    std::function<int(const std::vector<int>&, const std::vector<std::array<int, 3>>&)>
        rec = [&](const std::vector<int>& ls,
                  const std::vector<std::array<int, 3>>& ts) -> int {
        if (ls.size() == 1) {
            int node = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back({{}, all[ls[0]]});
            return node;
        }

        UnionFind uf(static_cast<int>(ls.size()));
        for (std::size_t i = 0; i < ls.size(); ++i) comp_of[ls[i]] = static_cast<int>(i);
        for (const auto& t : ts) uf.unite(comp_of[t[0]], comp_of[t[1]]);

        // group leaves by component, keyed by smallest member for determinism
        std::vector<std::vector<int>> groups(ls.size());
        for (std::size_t i = 0; i < ls.size(); ++i)
            groups[uf.find(static_cast<int>(i))].push_back(ls[i]);
        std::vector<std::vector<int>> comps;
        std::vector<int> comp_index(ls.size(), -1);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (!groups[i].empty()) {
                comp_index[i] = static_cast<int>(comps.size());
                comps.push_back(std::move(groups[i]));
            }
        }
        if (comps.size() == 1) {
            for (int l : ls) outcome.connected_at.push_back(all[l]);
            return -1;
        }

        std::vector<std::vector<std::array<int, 3>>> buckets(comps.size());
        for (const auto& t : ts) {
            int ct = comp_index[uf.find(comp_of[t[0]])];
            int cz = comp_index[uf.find(comp_of[t[2]])];
            if (ct == cz) buckets[ct].push_back(t);
            // otherwise the triplet is already displayed and drops out
        }

        int node = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        for (std::size_t c = 0; c < comps.size(); ++c) {
            int child = rec(comps[c], buckets[c]);
            if (child < 0) return -1;
            tree.nodes[node].children.push_back(child);
        }
        return node;
    };

    std::vector<int> ls(n);
    std::iota(ls.begin(), ls.end(), 0);
    int root = rec(ls, triples);
    if (root < 0) return outcome;   // connected_at already filled
    tree.root = root;
    outcome.tree = tree.canonicalized();
    return outcome;
}

}  // namespace arbornet

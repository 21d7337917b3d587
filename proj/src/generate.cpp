#include "arbornet/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arbornet {

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(seed) {
    if (state_ == 0) state_ = 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::next_below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
}

double Xorshift64Star::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

// Mutable arc-list workspace; vertex roles are tracked by degree counting on
// demand. Names: leaves are their labels "1".."n", interior "t#", hybrids
// "h#", roots "r#".
struct Workspace {
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::string> vertices;   // creation order
    int leaf_count = 0;
    int root_count = 0;
    int tree_counter = 0;
    int hybrid_counter = 0;
    int root_counter = 0;

    std::string new_leaf() { return std::to_string(++leaf_count); }
    std::string new_tree_vertex() { return "t" + std::to_string(tree_counter++); }
    std::string new_hybrid() { return "h" + std::to_string(hybrid_counter++); }
    std::string new_root() {
        ++root_count;
        return "r" + std::to_string(root_counter++);
    }

    bool is_leaf_name(const std::string& v) const {
        return !v.empty() && v[0] >= '0' && v[0] <= '9';
    }
    bool is_hybrid(const std::string& v) const { return !v.empty() && v[0] == 'h'; }

    std::vector<std::string> hybrids() const {
        std::vector<std::string> out;
        for (const std::string& v : vertices)
            if (is_hybrid(v)) out.push_back(v);
        return out;
    }
    std::vector<std::string> tree_vertices() const {
        std::vector<std::string> out;
        for (const std::string& v : vertices)
            if (!v.empty() && v[0] == 't') out.push_back(v);
        return out;
    }

    Network to_network() const {
        std::vector<Network::LabelRecord> labels;
        for (const std::string& v : vertices)
            if (is_leaf_name(v)) labels.emplace_back(v, v);
        return Network::from_arcs(arcs, labels);
    }

    // post-move checks; every move has already added a leaf, so the seed's
    // two-leaf state is never validated
    bool valid() const {
        Network net = to_network();
        return validate_m_network(net).ok() && is_arboreal(net) && is_stack_free(net);
    }
};

enum class Move { grow_leaf, new_root_hybrid, extend_hybrid };

bool apply_move(Workspace& ws, Move move, Xorshift64Star& rng) {
    switch (move) {
        case Move::grow_leaf: {
            // sites: attach to an existing tree vertex, or split an arc
            std::vector<std::string> tv = ws.tree_vertices();
            std::uint64_t site_count = tv.size() + ws.arcs.size();
            if (site_count == 0) return false;
            std::uint64_t pick = rng.next_below(site_count);
            if (pick < tv.size()) {
                ws.arcs.emplace_back(tv[pick], ws.new_leaf());
                ws.vertices.push_back(ws.arcs.back().second);
            } else {
                auto arc = ws.arcs[pick - tv.size()];
                std::string t = ws.new_tree_vertex();
                std::string leaf = ws.new_leaf();
                ws.arcs.erase(ws.arcs.begin() + static_cast<long>(pick - tv.size()));
                ws.arcs.emplace_back(arc.first, t);
                ws.arcs.emplace_back(t, arc.second);
                ws.arcs.emplace_back(t, leaf);
                ws.vertices.push_back(t);
                ws.vertices.push_back(leaf);
            }
            return true;
        }
        case Move::new_root_hybrid: {
            // subdivide an arc with non-hybrid endpoints by a fresh hybrid
            std::vector<std::size_t> sites;
            for (std::size_t i = 0; i < ws.arcs.size(); ++i)
                if (!ws.is_hybrid(ws.arcs[i].first) && !ws.is_hybrid(ws.arcs[i].second))
                    sites.push_back(i);
            if (sites.empty()) return false;
            std::size_t at = sites[rng.next_below(sites.size())];
            auto arc = ws.arcs[at];
            std::string h = ws.new_hybrid();
            std::string root = ws.new_root();
            std::string leaf = ws.new_leaf();
            ws.arcs.erase(ws.arcs.begin() + static_cast<long>(at));
            ws.arcs.emplace_back(arc.first, h);
            ws.arcs.emplace_back(h, arc.second);
            ws.arcs.emplace_back(root, h);
            ws.arcs.emplace_back(root, leaf);
            ws.vertices.push_back(h);
            ws.vertices.push_back(root);
            ws.vertices.push_back(leaf);
            return true;
        }
        case Move::extend_hybrid: {
            std::vector<std::string> hs = ws.hybrids();
            if (hs.empty()) return false;
            const std::string& h = hs[rng.next_below(hs.size())];
            std::string root = ws.new_root();
            std::string leaf = ws.new_leaf();
            ws.arcs.emplace_back(root, h);
            ws.arcs.emplace_back(root, leaf);
            ws.vertices.push_back(root);
            ws.vertices.push_back(leaf);
            return true;
        }
    }
    return false;
}

}  // namespace

Network random_network(const GenConfig& cfg) {
    if (cfg.n_leaves < 3)
        throw std::invalid_argument("random_network: n_leaves must be >= 3");
    if (cfg.target_roots &&
        (*cfg.target_roots < 1 || *cfg.target_roots > cfg.n_leaves - 1))
        throw std::invalid_argument("random_network: target_roots out of range");
    if (cfg.w_grow_leaf < 0 || cfg.w_new_root_hybrid < 0 || cfg.w_extend_hybrid < 0 ||
        cfg.w_root_cherry < 0)
        throw std::invalid_argument("random_network: negative move weight");
    if (cfg.w_grow_leaf + cfg.w_new_root_hybrid + cfg.w_extend_hybrid <= 0)
        throw std::invalid_argument("random_network: all growth weights are zero");

    Xorshift64Star rng(cfg.seed);

    Workspace ws;
    {
        std::string root = ws.new_root();
        std::string a = ws.new_leaf(), b = ws.new_leaf();
        ws.arcs = {{root, a}, {root, b}};
        ws.vertices = {root, a, b};
    }

    constexpr int kAttemptBudget = 256;
    while (ws.leaf_count < cfg.n_leaves) {
        int leaves_left = cfg.n_leaves - ws.leaf_count;
        int roots_needed = cfg.target_roots ? *cfg.target_roots - ws.root_count : -1;
        if (roots_needed == 0 && cfg.w_grow_leaf <= 0)
            throw std::invalid_argument(
                "random_network: target_roots reached but grow-leaf weight is zero");

        bool stepped = false;
        for (int attempt = 0; attempt < kAttemptBudget && !stepped; ++attempt) {
            double wg = cfg.w_grow_leaf;
            double wn = cfg.w_new_root_hybrid;
            double we = cfg.w_extend_hybrid;
            if (roots_needed == 0) wn = we = 0;                 // roots capped
            if (roots_needed >= leaves_left) wg = 0;            // every move must add a root
            double total = wg + wn + we;
            if (total <= 0)
                throw std::runtime_error("random_network: no applicable move");
            double roll = rng.next_unit() * total;
            Move move = roll < wg                ? Move::grow_leaf
                        : roll < wg + wn         ? Move::new_root_hybrid
                                                 : Move::extend_hybrid;

            Workspace backup = ws;
            if (!apply_move(ws, move, rng)) {
                ws = backup;
                continue;
            }
            if (!ws.valid()) {
                ws = backup;
                continue;
            }
            stepped = true;
        }
        if (!stepped)
            throw std::runtime_error("random_network: retry budget exhausted");
    }

    Network net = ws.to_network();
    if (cfg.target_roots && static_cast<int>(net.roots().size()) != *cfg.target_roots)
        throw std::runtime_error("random_network: target root count missed");
    return net;
}

}  // namespace arbornet

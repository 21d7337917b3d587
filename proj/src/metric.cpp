#include "arbornet/metric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "arbornet/encoding.hpp"

namespace arbornet {

std::uint64_t duet_triplet_distance(const Network& n1, const Network& n2) {
    if (n1.leaf_labels() != n2.leaf_labels())
        throw std::invalid_argument("duet_triplet_distance: differing label sets");

    TripletSystem r1 = induced_triplets(n1), r2 = induced_triplets(n2);
    DuetSystem d1 = induced_duets(n1, DuetMode::chain, r1);
    DuetSystem d2 = induced_duets(n2, DuetMode::chain, r2);

    std::vector<Triplet> rdiff;
    std::set_symmetric_difference(r1.members().begin(), r1.members().end(),
                                  r2.members().begin(), r2.members().end(),
                                  std::back_inserter(rdiff));
    std::vector<Duet> ddiff;
    std::set_symmetric_difference(d1.members().begin(), d1.members().end(),
                                  d2.members().begin(), d2.members().end(),
                                  std::back_inserter(ddiff));
    return static_cast<std::uint64_t>(rdiff.size() + ddiff.size());
}

namespace {

struct VertexSignature {
    int in = 0;
    int out = 0;
    std::vector<LeafLabel> below;

    auto operator<=>(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const Network& net) {
    std::vector<VertexSignature> sigs(net.vertex_count());
    for (int v = 0; v < net.vertex_count(); ++v)
        sigs[v] = {net.in_degree(v), net.out_degree(v), leaves_below(net, v)};
    return sigs;
}

}  // namespace

bool is_isomorphic(const Network& n1, const Network& n2) {
    if (n1.vertex_count() != n2.vertex_count()) return false;
    if (n1.arc_count() != n2.arc_count()) return false;
    if (n1.leaf_labels() != n2.leaf_labels()) return false;

    std::vector<VertexSignature> s1 = signatures(n1), s2 = signatures(n2);
    std::map<VertexSignature, std::vector<int>> classes2;
    for (int v = 0; v < n2.vertex_count(); ++v) classes2[s2[v]].push_back(v);

    std::vector<const std::vector<int>*> candidates(n1.vertex_count());
    std::map<VertexSignature, int> class_sizes1;
    for (int v = 0; v < n1.vertex_count(); ++v) {
        auto it = classes2.find(s1[v]);
        if (it == classes2.end()) return false;
        candidates[v] = &it->second;
        ++class_sizes1[s1[v]];
    }
    for (const auto& [sig, members] : classes2)
        if (class_sizes1[sig] != static_cast<int>(members.size())) return false;

    // assign scarce vertices first
    std::vector<int> order(n1.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[a]->size() < candidates[b]->size();
    });

    std::vector<int> image(n1.vertex_count(), -1);
    std::vector<char> used(n2.vertex_count(), 0);

    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w : *candidates[v]) {
            if (used[w]) continue;
            bool consistent = true;
            for (std::size_t q = 0; q < pos && consistent; ++q) {
                int u = order[q];
                if (n1.has_arc(v, u) != n2.has_arc(w, image[u])) consistent = false;
                if (n1.has_arc(u, v) != n2.has_arc(image[u], w)) consistent = false;
            }
            if (!consistent) continue;
            image[v] = w;
            used[w] = 1;
            if (assign(pos + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return assign(0);
}

}  // namespace arbornet

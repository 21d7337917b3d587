#include "arbornet/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace arbornet {

bool is_valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Root: return "root";
        case VertexClass::Leaf: return "leaf";
        case VertexClass::TreeVertex: return "tree-vertex";
        case VertexClass::Hybrid: return "hybrid";
        case VertexClass::Invalid: return "invalid";
    }
    return "invalid";
}

Network Network::from_arcs(const std::vector<Arc>& arcs,
                           const std::vector<LabelRecord>& labels) {
    std::set<std::string> name_set;
    for (const Arc& a : arcs) {
        if (!is_valid_token(a.first) || !is_valid_token(a.second))
            throw std::invalid_argument("invalid vertex token in arc");
        if (a.first == a.second)
            throw std::invalid_argument("self-arc on vertex '" + a.first + "'");
        name_set.insert(a.first);
        name_set.insert(a.second);
    }
    if (name_set.empty())
        throw std::invalid_argument("network has no arcs");

    Network net;
    net.names_.assign(name_set.begin(), name_set.end());
    std::map<std::string, int> index;
    for (int i = 0; i < net.vertex_count(); ++i) index[net.names_[i]] = i;

    net.children_.resize(net.names_.size());
    net.parents_.resize(net.names_.size());
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs) {
        int t = index[a.first], h = index[a.second];
        if (!seen.insert({t, h}).second)
            throw std::invalid_argument("duplicate arc " + a.first + " -> " + a.second);
        net.children_[t].push_back(h);
        net.parents_[h].push_back(t);
    }
    net.arc_count_ = static_cast<int>(seen.size());
    for (auto& v : net.children_) std::sort(v.begin(), v.end());
    for (auto& v : net.parents_) std::sort(v.begin(), v.end());

    net.labels_.assign(net.names_.size(), "");
    std::set<std::string> used_labels;
    for (const LabelRecord& rec : labels) {
        if (!is_valid_token(rec.second))
            throw std::invalid_argument("invalid leaf-label token '" + rec.second + "'");
        auto it = index.find(rec.first);
        if (it == index.end())
            throw std::invalid_argument("label on unknown vertex '" + rec.first + "'");
        int v = it->second;
        if (!net.labels_[v].empty())
            throw std::invalid_argument("vertex '" + rec.first + "' labeled twice");
        if (!used_labels.insert(rec.second).second)
            throw std::invalid_argument("leaf label '" + rec.second + "' used twice");
        if (net.out_degree(v) != 0 || net.in_degree(v) != 1)
            throw std::invalid_argument("label '" + rec.second +
                                        "' on vertex that is not an in-degree-1 sink");
        net.labels_[v] = rec.second;
    }

    // acyclicity (Kahn)
    std::vector<int> indeg(net.names_.size());
    std::queue<int> ready;
    for (int v = 0; v < net.vertex_count(); ++v) {
        indeg[v] = net.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    int visited = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++visited;
        for (int c : net.children_[v])
            if (--indeg[c] == 0) ready.push(c);
    }
    if (visited != net.vertex_count())
        throw std::invalid_argument("directed graph is cyclic");

    return net;
}

int Network::index_of(const VertexId& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        throw std::invalid_argument("unknown vertex '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

bool Network::has_vertex(const VertexId& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

bool Network::has_arc(int tail, int head) const {
    const std::vector<int>& c = children_[tail];
    return std::binary_search(c.begin(), c.end(), head);
}

int Network::vertex_of_label(const LeafLabel& l) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[v] == l) return v;
    return -1;
}

std::vector<LeafLabel> Network::leaf_labels() const {
    std::vector<LeafLabel> out;
    for (const LeafLabel& l : labels_)
        if (!l.empty()) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Network::roots() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (in_degree(v) == 0) out.push_back(v);
    return out;
}

std::vector<Network::Arc> Network::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int c : children_[v]) out.emplace_back(names_[v], names_[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Network::LabelRecord> Network::label_records() const {
    std::vector<LabelRecord> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!labels_[v].empty()) out.emplace_back(names_[v], labels_[v]);
    return out;   // vertex order is already lexicographic
}

UndirectedView UndirectedView::make(std::vector<std::string> names,
                                    std::vector<LeafLabel> labels,
                                    std::vector<std::pair<int, int>> edges) {
    UndirectedView view;
    view.names = std::move(names);
    view.labels = std::move(labels);
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    view.edges = std::move(edges);
    view.adjacency.assign(view.names.size(), {});
    for (const auto& e : view.edges) {
        view.adjacency[e.first].push_back(e.second);
        view.adjacency[e.second].push_back(e.first);
    }
    return view;
}

VertexClass classify(const Network& net, int v) {
    int in = net.in_degree(v), out = net.out_degree(v);
    if (in == 0 && out >= 2) return VertexClass::Root;
    if (in == 1 && out == 0 && net.is_labeled(v)) return VertexClass::Leaf;
    if (in >= 2 && out == 1) return VertexClass::Hybrid;
    if (in == 1 && out >= 2) return VertexClass::TreeVertex;
    return VertexClass::Invalid;
}

VertexClass classify(const Network& net, const VertexId& v) {
    return classify(net, net.index_of(v));
}

namespace {

bool view_connected(const UndirectedView& view) {
    if (view.names.empty()) return true;
    std::vector<char> seen(view.names.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : view.adjacency[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == view.vertex_count();
}

}  // namespace

ValidityReport validate_m_network(const Network& net) {
    ValidityReport report;
    for (int v = 0; v < net.vertex_count(); ++v) {
        int in = net.in_degree(v), out = net.out_degree(v);
        if (in == 0) {
            if (out != 2)
                report.violations.push_back(
                    {net.name(v), "root has out-degree " + std::to_string(out) +
                                      " (expected 2)"});
        } else if (in == 1 && out == 0) {
            if (!net.is_labeled(v))
                report.violations.push_back({net.name(v), "unlabeled sink vertex"});
        } else if (in == 1 && out >= 2) {
            // tree vertex
        } else if (in >= 2 && out == 1) {
            // hybrid
        } else {
            report.violations.push_back(
                {net.name(v), "invalid degree pattern (in=" + std::to_string(in) +
                                  ", out=" + std::to_string(out) + ")"});
        }
    }
    if (net.leaf_labels().size() < 3)
        report.violations.push_back({"", "fewer than 3 leaf labels"});
    if (!view_connected(underlying_graph(net)))
        report.violations.push_back({"", "underlying graph is disconnected"});
    return report;
}

UndirectedView underlying_graph(const Network& net) {
    std::vector<std::string> names;
    std::vector<LeafLabel> labels;
    names.reserve(net.vertex_count());
    for (int v = 0; v < net.vertex_count(); ++v) {
        names.push_back(net.name(v));
        labels.push_back(net.label(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < net.vertex_count(); ++v)
        for (int c : net.children(v)) edges.emplace_back(v, c);
    return UndirectedView::make(std::move(names), std::move(labels), std::move(edges));
}

std::optional<UndirectedView> suppress_degree_two(const UndirectedView& view) {
    std::vector<std::set<int>> adj(view.names.size());
    for (const auto& e : view.edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::vector<char> removed(view.names.size(), 0);
    std::vector<int> pending;
    for (int v = 0; v < view.vertex_count(); ++v)
        if (view.labels[v].empty() && adj[v].size() == 2) pending.push_back(v);

    while (!pending.empty()) {
        int v = pending.back();
        pending.pop_back();
        if (removed[v] || adj[v].size() != 2) continue;
        auto it = adj[v].begin();
        int a = *it++;
        int b = *it;
        if (a == b) return std::nullopt;              // self-loop
        if (adj[a].count(b)) return std::nullopt;     // duplicate edge
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
        adj[v].clear();
        removed[v] = 1;
        // neighbor degrees are unchanged by the splice, so no new degree-2
        // vertices appear; the initial worklist suffices
    }

    std::vector<int> keep;
    for (int v = 0; v < view.vertex_count(); ++v)
        if (!removed[v]) keep.push_back(v);
    std::vector<int> new_id(view.names.size(), -1);
    std::vector<std::string> names;
    std::vector<LeafLabel> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_id[keep[i]] = static_cast<int>(i);
        names.push_back(view.names[keep[i]]);
        labels.push_back(view.labels[keep[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : adj[v])
            if (v < u) edges.emplace_back(new_id[v], new_id[u]);
    return UndirectedView::make(std::move(names), std::move(labels), std::move(edges));
}

bool is_arboreal(const Network& net) {
    std::optional<UndirectedView> reduced = suppress_degree_two(underlying_graph(net));
    if (!reduced) return false;
    const UndirectedView& t = *reduced;
    if (!view_connected(t)) return false;
    if (t.edges.size() + 1 != t.names.size()) return false;
    for (int v = 0; v < t.vertex_count(); ++v) {
        bool labeled = !t.labels[v].empty();
        if (labeled != (t.degree(v) <= 1)) return false;
    }
    return true;
}

bool is_stack_free(const Network& net) {
    for (int v = 0; v < net.vertex_count(); ++v) {
        if (classify(net, v) != VertexClass::Hybrid) continue;
        for (int c : net.children(v))
            if (classify(net, c) == VertexClass::Hybrid) return false;
    }
    return true;
}

bool is_banyan(const Network& net) {
    for (int v = 0; v < net.vertex_count(); ++v) {
        VertexClass cls = classify(net, v);
        if (cls == VertexClass::Hybrid) {
            for (int p : net.parents(v))
                if (net.in_degree(p) != 0) return false;
        } else if (cls == VertexClass::Leaf) {
            int p = net.parents(v)[0];
            VertexClass pc = classify(net, p);
            if (pc != VertexClass::Root && pc != VertexClass::Hybrid) return false;
        }
    }
    return true;
}

std::vector<LeafLabel> leaves_below(const Network& net, int v) {
    std::vector<char> seen(net.vertex_count(), 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    std::vector<LeafLabel> out;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (net.is_labeled(u)) out.push_back(net.label(u));
        for (int c : net.children(u)) {
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LeafLabel> leaves_below(const Network& net, const VertexId& v) {
    return leaves_below(net, net.index_of(v));
}

RootedTree descendant_tree(const Network& net, int r) {
    if (net.in_degree(r) != 0)
        throw std::invalid_argument("descendant_tree: vertex '" + net.name(r) +
                                    "' is not a root");
    std::vector<char> reach(net.vertex_count(), 0);
    std::vector<int> stack{r};
    reach[r] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : net.children(u)) {
            if (!reach[c]) {
                reach[c] = 1;
                stack.push_back(c);
            }
        }
    }
    for (int v = 0; v < net.vertex_count(); ++v) {
        if (!reach[v] || v == r) continue;
        int inner_parents = 0;
        for (int p : net.parents(v))
            if (reach[p]) ++inner_parents;
        if (inner_parents >= 2)
            throw std::invalid_argument(
                "descendant_tree: reachable sub-DAG below '" + net.name(r) +
                "' is not a tree");
    }

    RootedTree tree;
    // follow out-degree-1 chains down to the next branching vertex or leaf
    auto resolve = [&](int v) {
        while (net.out_degree(v) == 1) v = net.children(v)[0];
        return v;
    };
    std::function<int(int)> grow = [&](int v) -> int {
        int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        if (net.out_degree(v) == 0) {
            if (!net.is_labeled(v))
                throw std::invalid_argument("descendant_tree: unlabeled sink below '" +
                                            net.name(r) + "'");
            tree.nodes[id].label = net.label(v);
            return id;
        }
        for (int c : net.children(v)) {
            int child_id = grow(resolve(c));
            tree.nodes[id].children.push_back(child_id);
        }
        return id;
    };
    tree.root = grow(resolve(r));
    return tree.canonicalized();
}

RootedTree descendant_tree(const Network& net, const VertexId& r) {
    return descendant_tree(net, net.index_of(r));
}

std::vector<std::pair<LeafLabel, LeafLabel>> reticulated_cherries(const Network& net) {
    std::vector<std::pair<LeafLabel, LeafLabel>> out;
    for (int h = 0; h < net.vertex_count(); ++h) {
        if (classify(net, h) != VertexClass::Hybrid) continue;
        int child = net.children(h)[0];
        if (!net.is_labeled(child)) continue;
        for (int p : net.parents(h)) {
            for (int sibling : net.children(p)) {
                if (sibling == h || !net.is_labeled(sibling)) continue;
                out.emplace_back(net.label(sibling), net.label(child));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<LeafLabel>> generalized_cherries(const Network& net) {
    std::vector<std::vector<LeafLabel>> out;
    for (int v = 0; v < net.vertex_count(); ++v) {
        if (net.in_degree(v) == 0 || net.out_degree(v) == 0) continue;  // interior only
        std::vector<LeafLabel> set;
        bool all_leaves = true;
        for (int c : net.children(v)) {
            if (!net.is_labeled(c)) {
                all_leaves = false;
                break;
            }
            set.push_back(net.label(c));
        }
        if (all_leaves) {
            std::sort(set.begin(), set.end());
            out.push_back(std::move(set));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace arbornet

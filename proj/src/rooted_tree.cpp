#include "arbornet/rooted_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "arbornet/network.hpp"

namespace arbornet {

int RootedTree::leaf_count() const {
    int count = 0;
    for (const Node& n : nodes)
        if (n.children.empty()) ++count;
    return count;
}

std::vector<std::string> RootedTree::leaf_labels() const {
    std::vector<std::string> out;
    for (const Node& n : nodes)
        if (n.children.empty()) out.push_back(n.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> RootedTree::labels_below(int v) const {
    std::vector<std::string> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (nodes[u].children.empty()) {
            out.push_back(nodes[u].label);
        } else {
            for (int c : nodes[u].children) stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string RootedTree::to_string() const {
    std::function<void(int, std::string&)> emit = [&](int v, std::string& s) {
        if (nodes[v].children.empty()) {
            s += nodes[v].label;
            return;
        }
        s += '(';
        bool first = true;
        for (int c : nodes[v].children) {
            if (!first) s += ',';
            first = false;
            emit(c, s);
        }
        s += ')';
    };
    std::string s;
    if (root >= 0) emit(root, s);
    return s;
}

RootedTree RootedTree::canonicalized() const {
    if (root < 0) return {};

    // smallest descendant label per node
    std::vector<std::string> min_label(nodes.size());
    std::function<const std::string&(int)> fill = [&](int v) -> const std::string& {
        if (nodes[v].children.empty()) {
            min_label[v] = nodes[v].label;
        } else {
            for (int c : nodes[v].children) {
                const std::string& m = fill(c);
                if (min_label[v].empty() || m < min_label[v]) min_label[v] = m;
            }
        }
        return min_label[v];
    };
    fill(root);

    RootedTree out;
    out.nodes.reserve(nodes.size());
    std::function<int(int)> copy = [&](int v) {
        int id = static_cast<int>(out.nodes.size());
        out.nodes.push_back({{}, nodes[v].label});
        std::vector<int> order = nodes[v].children;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return min_label[x] < min_label[y];
        });
        for (int c : order) out.nodes[id].children.push_back(copy(c));
        return id;
    };
    out.root = copy(root);
    return out;
}

Network tree_as_network(const RootedTree& tree) {
    if (tree.root < 0 || tree.leaf_count() < 2)
        throw std::invalid_argument("tree_as_network: need at least two leaves");

    std::vector<std::string> leaf_names = tree.leaf_labels();
    auto taken = [&](const std::string& s) {
        return std::binary_search(leaf_names.begin(), leaf_names.end(), s);
    };

    std::vector<std::string> vertex_name(tree.nodes.size());
    int counter = 0;
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
        if (tree.nodes[v].children.empty()) {
            vertex_name[v] = tree.nodes[v].label;
        } else {
            std::string candidate;
            do {
                candidate = "n" + std::to_string(counter++);
            } while (taken(candidate));
            vertex_name[v] = candidate;
        }
    }

    std::vector<Network::Arc> arcs;
    std::vector<Network::LabelRecord> labels;
    for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
        for (int c : tree.nodes[v].children)
            arcs.emplace_back(vertex_name[v], vertex_name[c]);
        if (tree.nodes[v].children.empty())
            labels.emplace_back(vertex_name[v], tree.nodes[v].label);
    }
    return Network::from_arcs(arcs, labels);
}

}  // namespace arbornet

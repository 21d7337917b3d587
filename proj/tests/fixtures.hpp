#pragma once

#include <utility>
#include <vector>

#include "arbornet/network.hpp"

// Reference networks used throughout the tests; every sink is a leaf labeled
// by its own vertex name.
namespace fixtures {

inline arbornet::Network net_from(std::vector<arbornet::Network::Arc> arcs) {
    std::vector<char> has_out;
    std::vector<arbornet::Network::LabelRecord> labels;
    std::vector<std::string> heads;
    for (const auto& a : arcs) heads.push_back(a.second);
    for (const auto& h : heads) {
        bool sink = true;
        for (const auto& a : arcs)
            if (a.first == h) sink = false;
        if (sink) labels.emplace_back(h, h);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return arbornet::Network::from_arcs(arcs, labels);
}

// single root, three leaf children plus a cherry: root out-degree 3
inline arbornet::Network na() {
    return net_from({{"root", "c"}, {"c", "1"}, {"c", "2"}, {"root", "3"}, {"root", "4"}});
}

inline arbornet::Network nb1() {
    return net_from({{"r1", "5"},
                     {"r1", "u"},
                     {"u", "1"},
                     {"u", "h"},
                     {"r2", "4"},
                     {"r2", "h"},
                     {"h", "w"},
                     {"w", "2"},
                     {"w", "3"}});
}

inline arbornet::Network nb2() {
    return net_from({{"r1", "3"},
                     {"r1", "h"},
                     {"r2", "4"},
                     {"r2", "h"},
                     {"h", "c"},
                     {"c", "1"},
                     {"c", "2"}});
}

inline arbornet::Network nc() {
    return net_from({{"r1", "3"},
                     {"r1", "p"},
                     {"p", "1"},
                     {"p", "h"},
                     {"r2", "4"},
                     {"r2", "h"},
                     {"h", "2"}});
}

// nc with leaves 1 and 2 swapped
inline arbornet::Network nd() {
    return net_from({{"r1", "3"},
                     {"r1", "p"},
                     {"p", "2"},
                     {"p", "h"},
                     {"r2", "4"},
                     {"r2", "h"},
                     {"h", "1"}});
}

// stacked hybrids: arc h1 -> h2
inline arbornet::Network ne() {
    return net_from({{"r1", "2"},
                     {"r1", "h1"},
                     {"r2", "3"},
                     {"r2", "h1"},
                     {"h1", "h2"},
                     {"r3", "4"},
                     {"r3", "h2"},
                     {"h2", "1"}});
}

inline arbornet::Network nf() {
    return net_from({{"r1", "2"},
                     {"r1", "h"},
                     {"r2", "3"},
                     {"r2", "h"},
                     {"r3", "4"},
                     {"r3", "h"},
                     {"h", "1"}});
}

inline arbornet::Network fx4() {
    return net_from({{"r1", "c12"},   {"c12", "1"},  {"c12", "2"},  {"r1", "h345"},
                     {"r2", "h345"},  {"r2", "h9"},  {"r0", "h9"},  {"h9", "9"},
                     {"r0", "10"},    {"h345", "v345"}, {"v345", "3"}, {"v345", "4"},
                     {"v345", "5"},   {"r3", "8"},   {"r3", "w"},   {"w", "h345"},
                     {"w", "v67"},    {"v67", "6"},  {"v67", "7"}});
}

// valid 2-network that is not arboreal (cycle c-a-d-b in the underlying
// graph); induces the same triplets as nb1
inline arbornet::Network nonarboreal_twin() {
    return net_from({{"f", "5"},
                     {"f", "e"},
                     {"e", "1"},
                     {"e", "c"},
                     {"c", "a"},
                     {"c", "b"},
                     {"d", "a"},
                     {"d", "b"},
                     {"a", "2"},
                     {"b", "3"},
                     {"g", "d"},
                     {"g", "4"}});
}

// arboreal 2-network with a nonempty triplet system and no duets at all
inline arbornet::Network duetless() {
    return net_from({{"f", "a"},
                     {"a", "1"},
                     {"a", "2"},
                     {"f", "b"},
                     {"b", "3"},
                     {"b", "c"},
                     {"c", "4"},
                     {"e", "c"},
                     {"e", "d"},
                     {"d", "5"},
                     {"d", "6"}});
}

}  // namespace fixtures

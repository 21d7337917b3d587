#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "arbornet/network.hpp"

namespace arbornet {

/// Rooted triplet ab|c: cherry {a,b}, outgroup c. Stored with a < b.
struct Triplet {
    LeafLabel a, b, c;

    static Triplet make(LeafLabel x, LeafLabel y, LeafLabel z);
    std::vector<LeafLabel> leaf_set() const;   // sorted {a,b,c}
    auto operator<=>(const Triplet&) const = default;
};

/// Duet <a,b>: unordered leaf pair, stored with a < b.
struct Duet {
    LeafLabel a, b;

    static Duet make(LeafLabel x, LeafLabel y);
    auto operator<=>(const Duet&) const = default;
};

class TripletSystem {
public:
    TripletSystem() = default;
    explicit TripletSystem(std::vector<Triplet> triplets);   // sorts, dedups

    const std::vector<Triplet>& members() const { return triplets_; }
    bool contains(const Triplet& t) const;
    std::size_t size() const { return triplets_.size(); }
    bool empty() const { return triplets_.empty(); }
    std::vector<LeafLabel> support() const;

    bool operator==(const TripletSystem&) const = default;

private:
    std::vector<Triplet> triplets_;
};

class DuetSystem {
public:
    DuetSystem() = default;
    explicit DuetSystem(std::vector<Duet> duets);

    const std::vector<Duet>& members() const { return duets_; }
    bool contains(const Duet& d) const;
    std::size_t size() const { return duets_.size(); }
    bool empty() const { return duets_.empty(); }
    std::vector<LeafLabel> support() const;

    bool operator==(const DuetSystem&) const = default;

private:
    std::vector<Duet> duets_;
};

// R(N): xy|z such that some root has all three below it and, in that root's
// descendant tree, z is not below the least common ancestor of x and y.
// Throws on non-arboreal input.
TripletSystem induced_triplets(const Network& net);

enum class DuetMode {
    chain,        // default: root with a leaf child whose other child reaches
                  // a leaf through out-degree-1 vertices only
    literal_path  // the U(N)-path between the leaves crosses exactly one
                  // degree-2 vertex
};

DuetSystem induced_duets(const Network& net, DuetMode mode = DuetMode::chain);
DuetSystem induced_duets(const Network& net, DuetMode mode,
                         const TripletSystem& triplets);

// Chain-mode duets together with the root that witnesses each of them.
std::vector<std::pair<Duet, VertexId>> duet_root_witnesses(const Network& net);

// Members whose leaf set lies inside `keep`.
TripletSystem restrict_triplets(const TripletSystem& sys,
                                const std::vector<LeafLabel>& keep);

// L(R) ∪ L(D), sorted.
std::vector<LeafLabel> support(const TripletSystem& r, const DuetSystem& d);

}  // namespace arbornet

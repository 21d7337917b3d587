#pragma once

#include <cstdint>

#include "arbornet/network.hpp"

namespace arbornet {

// |(D(n1) ∪ R(n1)) Δ (D(n2) ∪ R(n2))| for arboreal m-networks on the same
// label set; throws when the label sets differ.
std::uint64_t duet_triplet_distance(const Network& n1, const Network& n2);

// Arc-preserving vertex bijection fixing every leaf label. Backtracking with
// (degrees, leaves-below) candidate pruning; meant for desk-scale instances.
bool is_isomorphic(const Network& n1, const Network& n2);

}  // namespace arbornet

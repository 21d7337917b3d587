#pragma once

#include <cstdint>
#include <optional>

#include "arbornet/network.hpp"

namespace arbornet {

/// xorshift64* (Marsaglia/Vigna): x ^= x>>12; x ^= x<<25; x ^= x>>27;
/// return x * 2685821657736338717. State must be nonzero; a zero seed is
/// remapped to a fixed constant so every seed is usable.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound);   // uniform in [0, bound)
    double next_unit();                              // uniform in [0, 1)

private:
    std::uint64_t state_;
};

struct GenConfig {
    int n_leaves = 0;                       // >= 3
    std::optional<int> target_roots;        // exact root count if set
    std::uint64_t seed = 0;

    // Move weights; root_cherry is the fixed two-leaf seed and its weight is
    // not consulted during growth.
    double w_grow_leaf = 3.0;
    double w_new_root_hybrid = 1.0;
    double w_extend_hybrid = 1.0;
    double w_root_cherry = 1.0;
};

// Seeded growth of a stack-free arboreal network with exactly cfg.n_leaves
// leaves (labels "1".."n"). Pure function of cfg. Throws std::invalid_argument
// on bad config and std::runtime_error when the retry budget is exhausted.
Network random_network(const GenConfig& cfg);

}  // namespace arbornet

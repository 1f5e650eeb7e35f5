#pragma once

#include <cstdint>
#include <vector>

#include "tilecount/core.hpp"

namespace tilecount {

// Expand a tiling of [n/(k_s+k_r)] into a tiling of [n] with first segment
// size k_s and first rift size k_r. The sub-tiling must have first-segment
// size >= 2 and k_s must divide k_r, k_r > 0.
TilingPair expand_tiling(const TilingPair& sub, std::uint64_t k_s,
                         std::uint64_t k_r);

struct EnumerationResult {
    std::vector<TilingPair> tilings;  // sorted under compare_tilings
    bool truncated = false;
};

// All of T(alpha,[n]), each exactly once, in the tiling total order.
// Empty when alpha does not divide n.
EnumerationResult enumerate_interval(std::uint64_t alpha, std::uint64_t n,
                                     std::uint64_t limit = 1000000);

}  // namespace tilecount

#pragma once

#include <cstdint>
#include <vector>

#include "tilecount/core.hpp"
#include "tilecount/counting.hpp"

namespace tilecount {

// Removes everything but the first k_s positions of each (k_s+k_r)-block,
// closing the gaps: x -> x - k_r * floor(x / (k_s + k_r)).
PointSet compress_points(const PointSet& x, std::uint64_t k_s, std::uint64_t k_r);

// Every ((k_r/k_s)+1)-th element of sorted B, starting from its smallest.
PointSet b_tilde(const PointSet& b, std::uint64_t k_s, std::uint64_t k_r);

// One compression round: maps (A,B) in T(alpha,[n]) with at least one rift
// to a tiling of [n / ((k_r/k_s)+1)], removing one distinct rift length.
TilingPair g1(const PointSet& a, const PointSet& b, std::uint64_t n);

// Compresses a sub-tiling of the ambient tile A along A's block structure
// in [n]; the result tiles compress_points(A, k_s, k_r).
TilingPair g2(const PointSet& tile_a, const PointSet& tile_b,
              const PointSet& ambient_a, std::uint64_t n);

// Iterates g2, recomputing the ambient via g1 each round, until the ambient
// is the interval [alpha]; the result lies in T(alpha', [alpha]).
TilingPair g3(const PointSet& tile_a, const PointSet& tile_b,
              const PointSet& ambient_a, const PointSet& ambient_b,
              std::uint64_t n);

struct SubtileVerdict {
    Count tilings_of_tile;      // |T(alpha', A)| by oracle
    Count tilings_of_interval;  // |T(alpha', [alpha])| by formula
    bool bound_holds = false;
    bool injective = false;     // g3 maps the oracle enumeration injectively
};

// Checks |T(alpha', A)| <= |T(alpha', [alpha])| and g3 injectivity for a
// tile A of [n].
SubtileVerdict subtile_bound_check(std::uint64_t alpha_prime,
                                   const PointSet& ambient_a,
                                   const PointSet& ambient_b, std::uint64_t n);

}  // namespace tilecount

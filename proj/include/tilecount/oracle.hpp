#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tilecount/core.hpp"
#include "tilecount/counting.hpp"

namespace tilecount {

// Raised when a search exceeds its node-visit budget; distinct from an
// empty result.
struct WorkCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All canonical tilings of an arbitrary finite C by tiles of size alpha,
// found by exact-cover backtracking over the tiling definition.
// Deterministic output order (lexicographic branch order).
std::vector<TilingPair> brute_force_tilings(std::uint64_t alpha, const PointSet& c,
                                            std::uint64_t node_cap = 100000000);

struct ProbeReport {
    std::uint64_t alpha = 0;
    std::uint64_t n = 0;
    std::uint64_t window = 0;
    Count interval_count;                       // |T(alpha,[n])|
    Count max_count;                            // max over scanned C
    std::vector<std::int64_t> argmax_c;         // a C attaining max_count
    std::vector<std::vector<std::int64_t>> violations;  // C with count > interval_count
    std::uint64_t sets_scanned = 0;
};

// Exhaustive scan over all C subset of [window] with |C| = n and 1 in C,
// comparing |T(alpha,C)| against |T(alpha,[n])|.
ProbeReport conjecture_probe(std::uint64_t alpha, std::uint64_t n,
                             std::uint64_t window,
                             std::uint64_t subset_cap = 10000000,
                             std::uint64_t node_cap = 100000000);

nlohmann::json probe_report_to_json(const ProbeReport& report);

}  // namespace tilecount

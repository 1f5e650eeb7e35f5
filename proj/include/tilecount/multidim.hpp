#pragma once

#include <cstdint>
#include <vector>

#include "tilecount/core.hpp"
#include "tilecount/counting.hpp"

namespace tilecount {

// Number of box tilings with fixed per-dimension projection sizes:
// the product of the per-axis interval counts.
Count count_box_profile(const std::vector<std::uint64_t>& alphas,
                        const BoxShape& box);

// Sum of count_box_profile over all ordered divisor tuples (a1,...,ad)
// with product alpha and a_i | x_i.
Count count_box_total(std::uint64_t alpha, const BoxShape& box);

// All Cartesian-product tilings for a fixed projection profile.
std::vector<TilingPair> enumerate_box(const std::vector<std::uint64_t>& alphas,
                                      const BoxShape& box,
                                      std::uint64_t limit = 1000000);

struct DcountReport {
    Count box_max;
    std::uint64_t box_argmax_alpha = 0;
    Count interval_max;
    std::uint64_t interval_argmax_alpha = 0;
    bool holds = false;  // box_max <= interval_max
};

// max_alpha |T(alpha,box)| <= max_alpha' |T(alpha',[|box|])|.
DcountReport verify_dcount(const BoxShape& box);

}  // namespace tilecount

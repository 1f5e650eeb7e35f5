#include "tilecount/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilecount/counting.hpp"

namespace tilecount {

TilingPair expand_tiling(const TilingPair& sub, std::uint64_t k_s,
                         std::uint64_t k_r) {
    if (k_r == 0 || k_s == 0 || k_r % k_s != 0)
        throw std::invalid_argument("expand_tiling: need k_s | k_r and k_r > 0");
    const std::uint64_t sub_n = region_size(sub.region);
    // Subs with first-segment size 1 expand to valid tilings too; their true
    // first rift is then larger than k_r, so the enumerator skips them to
    // avoid emitting the same tiling under two (k_s,k_r) classes.
    const std::uint64_t block = k_s + k_r;
    std::vector<std::int64_t> tile;
    for (std::int64_t m : sub.tile.values())
        for (std::uint64_t j = 1; j <= k_s; ++j)
            tile.push_back((m - 1) * static_cast<std::int64_t>(block) +
                           static_cast<std::int64_t>(j));

    std::vector<std::int64_t> trans;
    for (std::int64_t b : sub.translations.values())
        for (std::uint64_t x = 0; x <= k_r / k_s; ++x)
            trans.push_back(b * static_cast<std::int64_t>(block) +
                            static_cast<std::int64_t>(x * k_s));

    return TilingPair{PointSet::from_values(std::move(tile)),
                      PointSet::from_values(std::move(trans)),
                      BoxShape({sub_n * block})};
}

namespace {

void enumerate_into(std::uint64_t alpha, std::uint64_t n,
                    std::vector<TilingPair>& out, std::uint64_t limit,
                    bool& truncated) {
    if (n % alpha != 0) return;
    const std::uint64_t beta = n / alpha;

    // k_s = alpha, k_r = 0: the unique rift-free tiling.
    {
        std::vector<std::int64_t> trans;
        for (std::uint64_t x = 0; x < beta; ++x)
            trans.push_back(static_cast<std::int64_t>(x * alpha));
        out.push_back(TilingPair{PointSet::interval(1, static_cast<std::int64_t>(alpha)),
                                 PointSet::from_values(std::move(trans)),
                                 BoxShape({n})});
        if (out.size() >= limit) {
            truncated = true;
            return;
        }
    }

    for (std::uint64_t k_s : segment_options(alpha)) {
        if (k_s == alpha) continue;
        for (std::uint64_t k_r : rift_options(k_s, alpha, beta)) {
            std::vector<TilingPair> subs;
            bool sub_trunc = false;
            enumerate_into(alpha / k_s, n / (k_s + k_r), subs, limit, sub_trunc);
            truncated = truncated || sub_trunc;
            for (const TilingPair& sub : subs) {
                const auto d =
                    segment_rift_decomposition(sub.tile, region_size(sub.region));
                if (d.k_s < 2) continue;
                out.push_back(expand_tiling(sub, k_s, k_r));
                if (out.size() >= limit) {
                    truncated = true;
                    return;
                }
            }
        }
    }
}

}  // namespace

EnumerationResult enumerate_interval(std::uint64_t alpha, std::uint64_t n,
                                     std::uint64_t limit) {
    if (alpha == 0 || n == 0)
        throw std::invalid_argument("enumerate_interval: alpha and n must be positive");
    EnumerationResult result;
    enumerate_into(alpha, n, result.tilings, limit, result.truncated);
    std::sort(result.tilings.begin(), result.tilings.end(),
              [](const TilingPair& a, const TilingPair& b) {
                  return compare_tilings(a, b) == std::strong_ordering::less;
              });
    return result;
}

}  // namespace tilecount

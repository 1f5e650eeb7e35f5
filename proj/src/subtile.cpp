#include "tilecount/subtile.hpp"

#include <set>
#include <stdexcept>

#include "tilecount/counting.hpp"
#include "tilecount/oracle.hpp"

namespace tilecount {

PointSet compress_points(const PointSet& x, std::uint64_t k_s, std::uint64_t k_r) {
    if (x.dim() != 1) throw std::invalid_argument("compress_points: need d = 1");
    if (k_s == 0 || k_r == 0 || k_r % k_s != 0)
        throw std::invalid_argument("compress_points: need k_s | k_r, k_r > 0");
    const std::int64_t block = static_cast<std::int64_t>(k_s + k_r);
    const std::int64_t drop = static_cast<std::int64_t>(k_r);
    std::vector<std::int64_t> out;
    for (std::int64_t v : x.values()) out.push_back(v - drop * (v / block));
    return PointSet::from_values(std::move(out));
}

PointSet b_tilde(const PointSet& b, std::uint64_t k_s, std::uint64_t k_r) {
    if (b.dim() != 1) throw std::invalid_argument("b_tilde: need d = 1");
    if (k_r == 0) throw std::invalid_argument("b_tilde: k_r must be positive");
    const std::uint64_t stride = k_r / k_s + 1;
    const auto vals = b.values();
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < vals.size(); i += stride) out.push_back(vals[i]);
    return PointSet::from_values(std::move(out));
}

TilingPair g1(const PointSet& a, const PointSet& b, std::uint64_t n) {
    const auto d = segment_rift_decomposition(a, n);
    if (d.k_r == 0) throw std::invalid_argument("g1: tile has no rift");
    const std::uint64_t stride = d.k_r / d.k_s + 1;
    return TilingPair{compress_points(a, d.k_s, d.k_r),
                      compress_points(b_tilde(b, d.k_s, d.k_r), d.k_s, d.k_r),
                      BoxShape({n / stride})};
}

TilingPair g2(const PointSet& tile_a, const PointSet& tile_b,
              const PointSet& ambient_a, std::uint64_t n) {
    if (!is_valid_tiling(tile_a, tile_b, ambient_a))
        throw std::invalid_argument("g2: input is not a valid tiling of the ambient");
    const auto d = segment_rift_decomposition(ambient_a, n);
    if (d.k_r == 0) throw std::invalid_argument("g2: ambient already contiguous");
    return TilingPair{compress_points(tile_a, d.k_s, d.k_r),
                      compress_points(tile_b, d.k_s, d.k_r),
                      compress_points(ambient_a, d.k_s, d.k_r)};
}

TilingPair g3(const PointSet& tile_a, const PointSet& tile_b,
              const PointSet& ambient_a, const PointSet& ambient_b,
              std::uint64_t n) {
    if (!is_valid_tiling(ambient_a, ambient_b, BoxShape({n})))
        throw std::invalid_argument("g3: (ambient_a, ambient_b) does not tile [n]");
    if (!is_valid_tiling(tile_a, tile_b, ambient_a))
        throw std::invalid_argument("g3: (tile_a, tile_b) does not tile the ambient");

    PointSet cur_a = tile_a;
    PointSet cur_b = tile_b;
    PointSet amb_a = ambient_a;
    PointSet amb_b = ambient_b;
    std::uint64_t cur_n = n;
    for (;;) {
        const auto d = segment_rift_decomposition(amb_a, cur_n);
        if (d.k_r == 0) break;  // ambient is now the interval [alpha]
        const TilingPair sub = g2(cur_a, cur_b, amb_a, cur_n);
        const TilingPair amb = g1(amb_a, amb_b, cur_n);
        cur_a = sub.tile;
        cur_b = sub.translations;
        amb_a = amb.tile;
        amb_b = amb.translations;
        cur_n = region_size(amb.region);
    }
    return TilingPair{cur_a, cur_b, BoxShape({static_cast<std::uint64_t>(amb_a.size())})};
}

SubtileVerdict subtile_bound_check(std::uint64_t alpha_prime,
                                   const PointSet& ambient_a,
                                   const PointSet& ambient_b, std::uint64_t n) {
    const std::uint64_t alpha = ambient_a.size();
    const auto sub_tilings = brute_force_tilings(alpha_prime, ambient_a);

    SubtileVerdict verdict;
    verdict.tilings_of_tile = sub_tilings.size();
    verdict.tilings_of_interval = count_full(alpha_prime, alpha);
    verdict.bound_holds = verdict.tilings_of_tile <= verdict.tilings_of_interval;

    std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> images;
    verdict.injective = true;
    for (const TilingPair& sub : sub_tilings) {
        const TilingPair image =
            g3(sub.tile, sub.translations, ambient_a, ambient_b, n);
        if (!is_valid_tiling(image.tile, image.translations, BoxShape({alpha}))) {
            verdict.injective = false;
            break;
        }
        if (!images.emplace(image.tile.values(), image.translations.values()).second) {
            verdict.injective = false;
            break;
        }
    }
    return verdict;
}

}  // namespace tilecount

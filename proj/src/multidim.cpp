#include "tilecount/multidim.hpp"

#include <stdexcept>

#include "tilecount/enumerate.hpp"
#include "tilecount/numtheory.hpp"

namespace tilecount {

Count count_box_profile(const std::vector<std::uint64_t>& alphas,
                        const BoxShape& box) {
    if (alphas.size() != box.sides.size())
        throw std::invalid_argument("count_box_profile: arity mismatch");
    Count total = 1;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        total *= count_full(alphas[i], box.sides[i]);
        if (total == 0) return 0;
    }
    return total;
}

namespace {

// Recursive divisor splitting of alpha across the axes.
void split_alpha(std::uint64_t remaining, const BoxShape& box, std::size_t axis,
                 std::vector<std::uint64_t>& profile, Count& total) {
    if (axis + 1 == box.sides.size()) {
        if (box.sides[axis] % remaining == 0) {
            profile[axis] = remaining;
            total += count_box_profile(profile, box);
        }
        return;
    }
    for (std::uint64_t d : divisors(remaining)) {
        if (box.sides[axis] % d != 0) continue;
        profile[axis] = d;
        split_alpha(remaining / d, box, axis + 1, profile, total);
    }
}

}  // namespace

Count count_box_total(std::uint64_t alpha, const BoxShape& box) {
    if (alpha == 0) throw std::invalid_argument("count_box_total: alpha must be positive");
    Count total = 0;
    std::vector<std::uint64_t> profile(box.sides.size());
    split_alpha(alpha, box, 0, profile, total);
    return total;
}

std::vector<TilingPair> enumerate_box(const std::vector<std::uint64_t>& alphas,
                                      const BoxShape& box, std::uint64_t limit) {
    if (alphas.size() != box.sides.size())
        throw std::invalid_argument("enumerate_box: arity mismatch");
    const unsigned d = box.dim();
    std::vector<std::vector<TilingPair>> per_axis(d);
    for (unsigned i = 0; i < d; ++i) {
        if (box.sides[i] % alphas[i] != 0) return {};
        per_axis[i] = enumerate_interval(alphas[i], box.sides[i], limit).tilings;
        if (per_axis[i].empty()) return {};
    }

    std::vector<TilingPair> out;
    std::vector<std::size_t> choice(d, 0);
    for (;;) {
        std::vector<Point> tile{{}};
        std::vector<Point> trans{{}};
        for (unsigned i = 0; i < d; ++i) {
            const TilingPair& axis = per_axis[i][choice[i]];
            std::vector<Point> next_tile, next_trans;
            for (const auto& prefix : tile)
                for (std::int64_t v : axis.tile.values()) {
                    Point p = prefix;
                    p.push_back(v);
                    next_tile.push_back(std::move(p));
                }
            for (const auto& prefix : trans)
                for (std::int64_t v : axis.translations.values()) {
                    Point p = prefix;
                    p.push_back(v);
                    next_trans.push_back(std::move(p));
                }
            tile = std::move(next_tile);
            trans = std::move(next_trans);
        }
        out.push_back(TilingPair{PointSet(d, std::move(tile)),
                                 PointSet(d, std::move(trans)), box});
        if (out.size() >= limit) break;

        unsigned i = d;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (choice[i] + 1 < per_axis[i].size()) {
                ++choice[i];
                for (unsigned j = i + 1; j < d; ++j) choice[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

DcountReport verify_dcount(const BoxShape& box) {
    DcountReport report;
    report.box_max = 0;
    report.interval_max = 0;
    const std::uint64_t n = box.volume();
    for (std::uint64_t alpha : divisors(n)) {
        const Count c = count_box_total(alpha, box);
        if (c > report.box_max) {
            report.box_max = c;
            report.box_argmax_alpha = alpha;
        }
        const Count ci = count_full(alpha, n);
        if (ci > report.interval_max) {
            report.interval_max = ci;
            report.interval_argmax_alpha = alpha;
        }
    }
    report.holds = report.box_max <= report.interval_max;
    return report;
}

}  // namespace tilecount

#include "doctest.h"

#include "tilecount/counting.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/numtheory.hpp"

using namespace tilecount;

namespace {
PointSet ps(std::vector<std::int64_t> v) { return PointSet::from_values(std::move(v)); }
}  // namespace

TEST_CASE("expand_tiling") {
    TilingPair s1{PointSet::interval(1, 2), ps({0}), BoxShape({2})};
    auto t1 = expand_tiling(s1, 1, 1);
    CHECK(t1.tile == ps({1, 3}));
    CHECK(t1.translations == ps({0, 1}));
    CHECK(is_valid_tiling(t1.tile, t1.translations, BoxShape({4})));

    TilingPair s2{ps({1, 3}), ps({0, 1}), BoxShape({4})};
    auto t2 = expand_tiling(s2, 2, 2);
    CHECK(t2.tile == ps({1, 2, 9, 10}));
    CHECK(t2.translations == ps({0, 2, 4, 6}));
    CHECK(is_valid_tiling(t2.tile, t2.translations, BoxShape({16})));

    TilingPair s3{ps({1, 2}), ps({0, 2}), BoxShape({4})};
    auto t3 = expand_tiling(s3, 2, 2);
    CHECK(t3.tile == ps({1, 2, 5, 6}));
    CHECK(t3.translations == ps({0, 2, 8, 10}));
    CHECK(is_valid_tiling(t3.tile, t3.translations, BoxShape({16})));
}

TEST_CASE("enumerate_interval small cases") {
    auto r = enumerate_interval(2, 4);
    REQUIRE(r.tilings.size() == 2);
    CHECK(r.tilings[0].tile == ps({1, 2}));
    CHECK(r.tilings[0].translations == ps({0, 2}));
    CHECK(r.tilings[1].tile == ps({1, 3}));
    CHECK(r.tilings[1].translations == ps({0, 1}));

    auto r12 = enumerate_interval(2, 12);
    REQUIRE(r12.tilings.size() == 4);
    std::vector<PointSet> tiles;
    for (const auto& t : r12.tilings) tiles.push_back(t.tile);
    CHECK(tiles == std::vector<PointSet>{ps({1, 2}), ps({1, 3}), ps({1, 4}),
                                         ps({1, 7})});
    CHECK(enumerate_interval(3, 5).tilings.empty());
}

TEST_CASE("enumerate_interval matches count_full and is well-formed") {
    for (std::uint64_t n = 1; n <= 72; ++n) {
        for (std::uint64_t alpha : divisors(n)) {
            auto r = enumerate_interval(alpha, n);
            CHECK_FALSE(r.truncated);
            CHECK(Count(r.tilings.size()) == count_full(alpha, n));
            for (std::size_t i = 0; i < r.tilings.size(); ++i) {
                const auto& t = r.tilings[i];
                CHECK(is_valid_tiling(t.tile, t.translations, BoxShape({n})));
                CHECK(t.translations.contains(Point{0}));
                auto d = segment_rift_decomposition(t.tile, n);
                for (auto [lo, hi] : d.segments)
                    CHECK(static_cast<std::uint64_t>(hi - lo + 1) == d.k_s);
                for (auto [lo, hi] : d.rifts)
                    CHECK(static_cast<std::uint64_t>(hi - lo + 1) % d.k_s == 0);
                if (i > 0)
                    CHECK(compare_tilings(r.tilings[i - 1], t) ==
                          std::strong_ordering::less);
            }
        }
    }
}

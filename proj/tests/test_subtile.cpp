#include "doctest.h"

#include "tilecount/counting.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/numtheory.hpp"
#include "tilecount/subtile.hpp"

using namespace tilecount;

namespace {
PointSet ps(std::vector<std::int64_t> v) { return PointSet::from_values(std::move(v)); }
}  // namespace

TEST_CASE("compress_points") {
    CHECK(compress_points(ps({1, 2, 5, 6}), 2, 2) == PointSet::interval(1, 4));
    CHECK(compress_points(ps({1, 2}), 2, 4) == ps({1, 2}));
    CHECK(compress_points(ps({1, 2, 9, 10}), 2, 2) == ps({1, 2, 5, 6}));
}

TEST_CASE("b_tilde") {
    CHECK(b_tilde(ps({0, 2, 8, 10}), 2, 2) == ps({0, 8}));
    CHECK(b_tilde(ps({0, 2, 4}), 1, 2) == ps({0}));
    for (std::uint64_t k_s : {std::uint64_t{1}, std::uint64_t{2}})
        for (std::uint64_t mult : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}}) {
            const std::uint64_t k_r = k_s * mult;
            PointSet b = ps({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
            CHECK(b_tilde(b, k_s, k_r).size() == b.size() / (k_r / k_s + 1));
        }
}

TEST_CASE("g1") {
    auto t1 = g1(ps({1, 2, 5, 6}), ps({0, 2}), 8);
    CHECK(t1.tile == PointSet::interval(1, 4));
    CHECK(t1.translations == ps({0}));

    auto t2 = g1(ps({1, 3}), ps({0, 1}), 4);
    CHECK(t2.tile == PointSet::interval(1, 2));
    CHECK(t2.translations == ps({0}));

    // First rift of {1,2,9,10} in [16] is {3..8}, so one round compresses
    // with stride 4 all the way down to ([4],{0}).
    auto t3 = g1(ps({1, 2, 9, 10}), ps({0, 2, 4, 6}), 16);
    CHECK(t3.tile == PointSet::interval(1, 4));
    CHECK(t3.translations == ps({0}));
}

TEST_CASE("g1 iterated ell times reaches ([alpha],{0})") {
    for (std::uint64_t n = 2; n <= 36; ++n) {
        for (std::uint64_t alpha : divisors(n)) {
            for (const auto& t : enumerate_interval(alpha, n).tilings) {
                PointSet a = t.tile;
                PointSet b = t.translations;
                std::uint64_t cur = n;
                std::set<std::uint64_t> rift_lengths;
                for (auto [lo, hi] : segment_rift_decomposition(a, cur).rifts)
                    rift_lengths.insert(static_cast<std::uint64_t>(hi - lo + 1));
                std::uint64_t rounds = 0;
                while (segment_rift_decomposition(a, cur).k_r != 0) {
                    auto next = g1(a, b, cur);
                    a = next.tile;
                    b = next.translations;
                    cur = region_size(next.region);
                    ++rounds;
                }
                CHECK(rounds == rift_lengths.size());
                CHECK(a == PointSet::interval(1, static_cast<std::int64_t>(alpha)));
                CHECK(b == ps({0}));
            }
        }
    }
}

TEST_CASE("g2") {
    auto t1 = g2(ps({1, 2}), ps({0, 4}), ps({1, 2, 5, 6}), 8);
    CHECK(t1.tile == ps({1, 2}));
    CHECK(t1.translations == ps({0, 2}));
    CHECK(region_points(t1.region) == PointSet::interval(1, 4));

    auto t2 = g2(ps({1, 5}), ps({0, 1}), ps({1, 2, 5, 6}), 8);
    CHECK(t2.tile == ps({1, 3}));
    CHECK(t2.translations == ps({0, 1}));
}

TEST_CASE("g3") {
    auto t = g3(ps({1, 2}), ps({0, 4}), ps({1, 2, 5, 6}), ps({0, 2}), 8);
    CHECK(is_valid_tiling(t.tile, t.translations, BoxShape({4})));
    CHECK(t.tile.size() == 2);

    // Contiguous ambient: zero rounds, identity.
    auto id = g3(ps({1, 2}), ps({0, 2}), PointSet::interval(1, 4), ps({0}), 4);
    CHECK(id.tile == ps({1, 2}));
    CHECK(id.translations == ps({0, 2}));

    auto one = g3(ps({1}), ps({0, 2}), ps({1, 3}), ps({0, 1}), 4);
    CHECK(one.tile.size() == 1);
    CHECK(is_valid_tiling(one.tile, one.translations, BoxShape({2})));
}

TEST_CASE("subtile_bound_check") {
    auto v = subtile_bound_check(2, ps({1, 2, 5, 6}), ps({0, 2}), 8);
    CHECK(v.tilings_of_tile == 2);
    CHECK(v.tilings_of_interval == 2);
    CHECK(v.bound_holds);
    CHECK(v.injective);

    auto v1 = subtile_bound_check(1, ps({1, 2, 5, 6}), ps({0, 2}), 8);
    CHECK(v1.tilings_of_tile == 1);
    CHECK(v1.bound_holds);

    auto v4 = subtile_bound_check(4, ps({1, 2, 5, 6}), ps({0, 2}), 8);
    CHECK(v4.tilings_of_tile == 1);
    CHECK(v4.bound_holds);
}

#include "doctest.h"

#include "tilecount/multidim.hpp"
#include "tilecount/numtheory.hpp"
#include "tilecount/oracle.hpp"

using namespace tilecount;

TEST_CASE("count_box_profile") {
    CHECK(count_box_profile({2, 1}, BoxShape({3, 2})) == 0);
    CHECK(count_box_profile({1, 2}, BoxShape({3, 2})) == 1);
    CHECK(count_box_profile({1, 1, 1}, BoxShape({2, 3, 4})) == 1);
}

TEST_CASE("count_box_total") {
    CHECK(count_box_total(2, BoxShape({3, 2})) == 1);
    CHECK(count_box_total(2, BoxShape({6})) == 2);
    CHECK(count_box_total(2, BoxShape({2, 2})) == 2);
}

TEST_CASE("enumerate_box") {
    auto r = enumerate_box({2, 1}, BoxShape({2, 3}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].tile == PointSet(2, {{1, 1}, {2, 1}}));
    CHECK(r[0].translations == PointSet(2, {{0, 0}, {0, 1}, {0, 2}}));
    CHECK(is_valid_tiling(r[0].tile, r[0].translations, BoxShape({2, 3})));

    CHECK(enumerate_box({1, 1}, BoxShape({1, 1})).size() == 1);
    CHECK(enumerate_box({2, 2}, BoxShape({4, 4})).size() == 4);
}

TEST_CASE("count_box_total matches the oracle on small boxes") {
    const std::vector<BoxShape> boxes = {
        BoxShape({2, 2}), BoxShape({3, 2}), BoxShape({4, 2}), BoxShape({4, 4}),
        BoxShape({6, 2}), BoxShape({2, 2, 2}), BoxShape({3, 3}), BoxShape({6, 4})};
    for (const auto& box : boxes) {
        const PointSet pts = box.points();
        for (std::uint64_t alpha : divisors(box.volume())) {
            auto oracle = brute_force_tilings(alpha, pts);
            CHECK(Count(oracle.size()) == count_box_total(alpha, box));
        }
    }
}

TEST_CASE("verify_dcount") {
    auto r32 = verify_dcount(BoxShape({3, 2}));
    CHECK(r32.holds);
    CHECK(r32.box_max == 1);
    CHECK(r32.interval_max == 2);

    auto r22 = verify_dcount(BoxShape({2, 2}));
    CHECK(r22.holds);
    CHECK(r22.box_max == 2);
    CHECK(r22.interval_max == 2);

    for (std::uint64_t n : {4, 6, 8, 9, 12}) CHECK(verify_dcount(BoxShape({n})).holds);
    for (const auto& box :
         {BoxShape({4, 2}), BoxShape({6, 6}), BoxShape({8, 4}), BoxShape({2, 2, 2})})
        CHECK(verify_dcount(box).holds);
}

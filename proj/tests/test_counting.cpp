#include "doctest.h"

#include "tilecount/counting.hpp"
#include "tilecount/numtheory.hpp"

using namespace tilecount;

TEST_CASE("segment_options") {
    CHECK(segment_options(4) == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(segment_options(1) == std::vector<std::uint64_t>{1});
    CHECK(segment_options(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
}

TEST_CASE("rift_options") {
    CHECK(rift_options(1, 2, 6) == std::vector<std::uint64_t>{1, 2, 5});
    CHECK(rift_options(2, 2, 6) == std::vector<std::uint64_t>{0});
    CHECK(rift_options(2, 4, 4) == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("psi") {
    CHECK(psi(2, 12, 1, 1) == 1);
    CHECK(psi(2, 4, 2, 0) == 1);
    CHECK(psi(6, 36, 6, 0) == 1);
    CHECK(psi(2, 5, 1, 1) == 0);
}

TEST_CASE("count_full") {
    CHECK(count_full(2, 4) == 2);
    CHECK(count_full(2, 12) == 4);
    CHECK(count_full(4, 16) == 6);
    CHECK(count_full(3, 5) == 0);
    for (std::uint64_t n = 1; n <= 64; ++n) CHECK(count_full(1, n) == 1);
}

TEST_CASE("count_restricted") {
    CHECK(count_restricted(2, 6) == 1);
    CHECK(count_restricted(2, 4) == 1);
    for (std::uint64_t n = 1; n <= 64; ++n) CHECK(count_restricted(1, n) == 1);
}

TEST_CASE("count_by_pair partitions count_full") {
    CHECK(count_by_pair(2, 12, 2, 0) == 1);
    CHECK(count_by_pair(2, 12, 1, 1) == 1);
    CHECK(count_by_pair(2, 12, 1, 2) == 1);
    CHECK(count_by_pair(2, 12, 1, 5) == 1);

    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t alpha : divisors(n)) {
            Count total = 0;
            for (std::uint64_t k_s : segment_options(alpha))
                for (std::uint64_t k_r : rift_options(k_s, alpha, n / alpha))
                    total += count_by_pair(alpha, n, k_s, k_r);
            CHECK(total == count_full(alpha, n));
        }
    }
}

TEST_CASE("count_ie agrees with count_full") {
    CHECK(count_ie(2, 4) == 2);
    CHECK(count_ie(2, 12) == 4);
    CHECK(count_ie(1, 1) == 1);
    for (std::uint64_t n = 1; n <= 96; ++n)
        for (std::uint64_t alpha : divisors(n))
            CHECK(count_ie(alpha, n) == count_full(alpha, n));
}

TEST_CASE("alpha/beta symmetry") {
    for (std::uint64_t n = 1; n <= 96; ++n)
        for (std::uint64_t alpha : divisors(n))
            CHECK(count_full(alpha, n) == count_full(n / alpha, n));
}

TEST_CASE("total_count") {
    CHECK(total_count(4) == 4);
    CHECK(total_count(6) == 6);
    CHECK(total_count(12) == 16);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK(total_count(p) == 2);
}

TEST_CASE("cache persistence round-trip") {
    count_full(4, 48);
    const std::string path = "count_cache_test.csv";
    save_count_cache(path);
    clear_count_cache();
    load_count_cache(path);
    CHECK(count_full(4, 48) == count_ie(4, 48));
    std::remove(path.c_str());
}

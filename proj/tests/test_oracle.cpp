#include "doctest.h"

#include <set>

#include "tilecount/counting.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/numtheory.hpp"
#include "tilecount/oracle.hpp"

using namespace tilecount;

namespace {
PointSet ps(std::vector<std::int64_t> v) { return PointSet::from_values(std::move(v)); }

// Region-independent identity of a tiling pair.
std::string pair_key(const TilingPair& t) {
    const std::string s = to_text(t);
    return s.substr(0, s.find("; C="));
}
}  // namespace

TEST_CASE("brute_force_tilings basics") {
    CHECK(brute_force_tilings(2, BoxShape({4}).points()).size() == 2);
    CHECK(brute_force_tilings(2, BoxShape({5}).points()).empty());

    const PointSet c = ps({1, 2, 5, 6});
    CHECK(brute_force_tilings(4, c).size() == 1);
    auto r = brute_force_tilings(2, c);
    REQUIRE(r.size() == 2);
    CHECK(r[0].tile == ps({1, 2}));
    CHECK(r[0].translations == ps({0, 4}));
    CHECK(r[1].tile == ps({1, 5}));
    CHECK(r[1].translations == ps({0, 1}));
}

TEST_CASE("oracle output is canonical and deterministic") {
    const PointSet c = BoxShape({12}).points();
    auto a = brute_force_tilings(2, c);
    auto b = brute_force_tilings(2, c);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(is_valid_tiling(a[i].tile, a[i].translations, c));
        CHECK(a[i].translations.contains(Point{0}));
    }
}

TEST_CASE("oracle agrees with the formulas on intervals") {
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (std::uint64_t alpha : divisors(n)) {
            auto oracle = brute_force_tilings(alpha, BoxShape({n}).points());
            CHECK(Count(oracle.size()) == count_full(alpha, n));
            auto enumerated = enumerate_interval(alpha, n).tilings;
            REQUIRE(enumerated.size() == oracle.size());
            std::set<std::string> o, e;
            for (const auto& t : oracle) o.insert(pair_key(t));
            for (const auto& t : enumerated) e.insert(pair_key(t));
            CHECK(o == e);
        }
    }
}

TEST_CASE("work cap") {
    CHECK_THROWS_AS(brute_force_tilings(2, BoxShape({24}).points(), 3),
                    WorkCapExceeded);
}

TEST_CASE("conjecture_probe") {
    auto r = conjecture_probe(2, 4, 6);
    CHECK(r.violations.empty());
    CHECK(r.max_count == 2);
    CHECK(r.interval_count == 2);
    CHECK(r.argmax_c == std::vector<std::int64_t>{1, 2, 3, 4});

    auto r1 = conjecture_probe(1, 3, 5);
    CHECK(r1.violations.empty());
    CHECK(r1.max_count == 1);

    auto r6 = conjecture_probe(2, 6, 8);
    CHECK(r6.violations.empty());
}

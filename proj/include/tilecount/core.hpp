#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tilecount {

using Point = std::vector<std::int64_t>;

// A finite set of lattice points of fixed dimension, stored sorted
// lexicographically with no duplicates, so equality is structural.
class PointSet {
  public:
    PointSet() = default;
    PointSet(unsigned dim, std::vector<Point> points);

    // 1-D convenience constructor.
    static PointSet interval(std::int64_t lo, std::int64_t hi);
    static PointSet from_values(std::vector<std::int64_t> values);

    unsigned dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const;
    bool is_subset_of(const PointSet& other) const;

    PointSet translated(const Point& shift) const;
    // 1-D accessors (dim() must be 1).
    std::vector<std::int64_t> values() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    unsigned dim_ = 1;
    std::vector<Point> points_;
};

// Side lengths (x1,...,xd) of the region [x1]x...x[xd], coordinates from 1.
struct BoxShape {
    std::vector<std::uint64_t> sides;

    BoxShape() = default;
    explicit BoxShape(std::vector<std::uint64_t> s);

    unsigned dim() const { return static_cast<unsigned>(sides.size()); }
    std::uint64_t volume() const;
    PointSet points() const;

    friend bool operator==(const BoxShape&, const BoxShape&) = default;
};

using Region = std::variant<BoxShape, PointSet>;

PointSet region_points(const Region& region);
std::uint64_t region_size(const Region& region);

// A canonical tiling pair: A + B = region as an exact cover, origin in B,
// every per-dimension minimum of B equal to 0.
struct TilingPair {
    PointSet tile;          // A
    PointSet translations;  // B
    Region region;

    friend bool operator==(const TilingPair& a, const TilingPair& b) {
        return a.tile == b.tile && a.translations == b.translations;
    }
};

PointSet minkowski_sum(const PointSet& a, const PointSet& b);

// True iff A + B = C as sets and |A|*|B| = |C| (collision-free exact cover).
bool is_valid_tiling(const PointSet& a, const PointSet& b, const Region& c);

// Shifts (A,B) so B has per-dimension minimum 0; throws if the origin is
// then absent from B.
TilingPair canonicalize(const PointSet& a, const PointSet& b, Region region);

// 1-D segment/rift run structure of a tile inside [n]. Trailing runs of
// [n] \ A after the last segment count as rifts, so segments and rifts
// alternate and jointly cover [n].
struct SegmentDecomposition {
    std::vector<std::pair<std::int64_t, std::int64_t>> segments;  // [lo,hi]
    std::vector<std::pair<std::int64_t, std::int64_t>> rifts;
    std::uint64_t k_s = 0;  // size of the first segment
    std::uint64_t k_r = 0;  // size of the first rift, 0 if none
};

SegmentDecomposition segment_rift_decomposition(const PointSet& a, std::uint64_t n);

// Partition of [n] into blocks of size k_s + k_r; rejects non-dividing sizes.
std::vector<std::pair<std::int64_t, std::int64_t>> meta_points(std::uint64_t n,
                                                               std::uint64_t k_s,
                                                               std::uint64_t k_r);

// Total order on canonical tilings of the same 1-D region:
// T < T' iff min(A \ A') < min(A' \ A).
std::strong_ordering compare_tilings(const TilingPair& t, const TilingPair& u);

// |A n (B+m)| = 1 or |C n (B+m)| < |B|.
bool overlap_check(const PointSet& a, const PointSet& b, const Region& c,
                   const Point& shift);

// Canonical text form `A={...}; B={...}; C=box(x1,...,xd)` and JSON form.
std::string to_text(const TilingPair& t);
nlohmann::json to_json(const TilingPair& t);
TilingPair tiling_from_json(const nlohmann::json& j);

}  // namespace tilecount

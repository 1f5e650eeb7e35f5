#include "tilecount/core.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tilecount {

PointSet::PointSet(unsigned dim, std::vector<Point> points) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("PointSet: dimension must be positive");
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("PointSet: point arity does not match dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
}

PointSet PointSet::interval(std::int64_t lo, std::int64_t hi) {
    std::vector<Point> pts;
    for (std::int64_t x = lo; x <= hi; ++x) pts.push_back({x});
    return PointSet(1, std::move(pts));
}

PointSet PointSet::from_values(std::vector<std::int64_t> values) {
    std::vector<Point> pts;
    pts.reserve(values.size());
    for (std::int64_t x : values) pts.push_back({x});
    return PointSet(1, std::move(pts));
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool PointSet::is_subset_of(const PointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(),
                         points_.begin(), points_.end());
}

PointSet PointSet::translated(const Point& shift) const {
    if (shift.size() != dim_)
        throw std::invalid_argument("translated: shift arity mismatch");
    std::vector<Point> pts = points_;
    for (auto& p : pts)
        for (unsigned i = 0; i < dim_; ++i) p[i] += shift[i];
    return PointSet(dim_, std::move(pts));
}

std::vector<std::int64_t> PointSet::values() const {
    if (dim_ != 1) throw std::logic_error("values: set is not 1-dimensional");
    std::vector<std::int64_t> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p[0]);
    return out;
}

BoxShape::BoxShape(std::vector<std::uint64_t> s) : sides(std::move(s)) {
    if (sides.empty()) throw std::invalid_argument("BoxShape: needs at least one side");
    for (std::uint64_t x : sides)
        if (x == 0) throw std::invalid_argument("BoxShape: sides must be >= 1");
}

std::uint64_t BoxShape::volume() const {
    std::uint64_t v = 1;
    for (std::uint64_t x : sides) v *= x;
    return v;
}

PointSet BoxShape::points() const {
    std::vector<Point> pts;
    pts.reserve(volume());
    Point cur(sides.size(), 1);
    for (;;) {
        pts.push_back(cur);
        unsigned i = dim();
        while (i > 0) {
            --i;
            if (static_cast<std::uint64_t>(cur[i]) < sides[i]) {
                ++cur[i];
                break;
            }
            cur[i] = 1;
            if (i == 0) return PointSet(dim(), std::move(pts));
        }
    }
}

PointSet region_points(const Region& region) {
    if (const auto* box = std::get_if<BoxShape>(&region)) return box->points();
    return std::get<PointSet>(region);
}

std::uint64_t region_size(const Region& region) {
    if (const auto* box = std::get_if<BoxShape>(&region)) return box->volume();
    return std::get<PointSet>(region).size();
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Point> pts;
    pts.reserve(a.size() * b.size());
    for (const auto& pa : a.points())
        for (const auto& pb : b.points()) {
            Point p(a.dim());
            for (unsigned i = 0; i < a.dim(); ++i) p[i] = pa[i] + pb[i];
            pts.push_back(std::move(p));
        }
    return PointSet(a.dim(), std::move(pts));
}

bool is_valid_tiling(const PointSet& a, const PointSet& b, const Region& c) {
    if (a.empty() || b.empty()) return false;
    const std::uint64_t target = region_size(c);
    if (a.size() * b.size() != target) return false;
    return minkowski_sum(a, b) == region_points(c);
}

TilingPair canonicalize(const PointSet& a, const PointSet& b, Region region) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("canonicalize: dimension mismatch");
    Point shift(b.dim(), std::numeric_limits<std::int64_t>::max());
    for (const auto& p : b.points())
        for (unsigned i = 0; i < b.dim(); ++i) shift[i] = std::min(shift[i], p[i]);
    Point neg = shift;
    for (auto& x : neg) x = -x;
    PointSet b2 = b.translated(neg);
    PointSet a2 = a.translated(shift);
    if (!b2.contains(Point(b.dim(), 0)))
        throw std::domain_error("canonicalize: origin not in B after shifting");
    return TilingPair{std::move(a2), std::move(b2), std::move(region)};
}

SegmentDecomposition segment_rift_decomposition(const PointSet& a, std::uint64_t n) {
    if (a.dim() != 1) throw std::invalid_argument("segment_rift_decomposition: need d = 1");
    const auto vals = a.values();
    if (vals.empty() || vals.front() != 1)
        throw std::invalid_argument("segment_rift_decomposition: min(A) must be 1");
    if (static_cast<std::uint64_t>(vals.back()) > n)
        throw std::invalid_argument("segment_rift_decomposition: A not inside [n]");

    SegmentDecomposition d;
    std::int64_t x = 1;
    const std::int64_t top = static_cast<std::int64_t>(n);
    std::size_t i = 0;
    bool in_segment = true;
    while (x <= top) {
        std::int64_t start = x;
        if (in_segment) {
            while (i < vals.size() && vals[i] == x) {
                ++i;
                ++x;
            }
            d.segments.emplace_back(start, x - 1);
        } else {
            while (x <= top && (i >= vals.size() || vals[i] != x)) ++x;
            d.rifts.emplace_back(start, x - 1);
        }
        in_segment = !in_segment;
    }
    d.k_s = static_cast<std::uint64_t>(d.segments.front().second -
                                      d.segments.front().first + 1);
    d.k_r = d.rifts.empty()
                ? 0
                : static_cast<std::uint64_t>(d.rifts.front().second -
                                             d.rifts.front().first + 1);
    return d;
}

std::vector<std::pair<std::int64_t, std::int64_t>> meta_points(std::uint64_t n,
                                                               std::uint64_t k_s,
                                                               std::uint64_t k_r) {
    const std::uint64_t block = k_s + k_r;
    if (block == 0 || n % block != 0)
        throw std::invalid_argument("meta_points: k_s + k_r must divide n");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::uint64_t x = 1; x <= n / block; ++x)
        out.emplace_back(static_cast<std::int64_t>((x - 1) * block + 1),
                         static_cast<std::int64_t>(x * block));
    return out;
}

std::strong_ordering compare_tilings(const TilingPair& t, const TilingPair& u) {
    const auto& a = t.tile.points();
    const auto& b = u.tile.points();
    // min(A \ A') < min(A' \ A) is exactly lexicographic order on the
    // sorted element sequences.
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                  b.end());
}

bool overlap_check(const PointSet& a, const PointSet& b, const Region& c,
                   const Point& shift) {
    const PointSet shifted = b.translated(shift);
    std::size_t in_a = 0;
    std::size_t in_c = 0;
    const PointSet cpts = region_points(c);
    for (const auto& p : shifted.points()) {
        if (a.contains(p)) ++in_a;
        if (cpts.contains(p)) ++in_c;
    }
    return in_a == 1 || in_c < b.size();
}

namespace {

std::string points_to_text(const PointSet& s) {
    std::ostringstream os;
    os << '{';
    bool first_point = true;
    for (const auto& p : s.points()) {
        if (!first_point) os << ',';
        first_point = false;
        if (s.dim() == 1) {
            os << p[0];
        } else {
            os << '(';
            for (unsigned i = 0; i < s.dim(); ++i) {
                if (i) os << ',';
                os << p[i];
            }
            os << ')';
        }
    }
    os << '}';
    return os.str();
}

nlohmann::json points_to_json(const PointSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : s.points()) arr.push_back(p);
    return arr;
}

PointSet points_from_json(const nlohmann::json& arr) {
    std::vector<Point> pts;
    unsigned dim = 1;
    for (const auto& jp : arr) {
        Point p = jp.get<Point>();
        dim = static_cast<unsigned>(p.size());
        pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts));
}

}  // namespace

std::string to_text(const TilingPair& t) {
    std::ostringstream os;
    os << "A=" << points_to_text(t.tile) << "; B=" << points_to_text(t.translations)
       << "; C=";
    if (const auto* box = std::get_if<BoxShape>(&t.region)) {
        os << "box(";
        for (std::size_t i = 0; i < box->sides.size(); ++i) {
            if (i) os << ',';
            os << box->sides[i];
        }
        os << ')';
    } else {
        os << points_to_text(std::get<PointSet>(t.region));
    }
    return os.str();
}

nlohmann::json to_json(const TilingPair& t) {
    nlohmann::json j;
    j["A"] = points_to_json(t.tile);
    j["B"] = points_to_json(t.translations);
    if (const auto* box = std::get_if<BoxShape>(&t.region))
        j["C"] = {{"box", box->sides}};
    else
        j["C"] = {{"points", points_to_json(std::get<PointSet>(t.region))}};
    return j;
}

TilingPair tiling_from_json(const nlohmann::json& j) {
    TilingPair t;
    t.tile = points_from_json(j.at("A"));
    t.translations = points_from_json(j.at("B"));
    const auto& c = j.at("C");
    if (c.contains("box"))
        t.region = BoxShape(c.at("box").get<std::vector<std::uint64_t>>());
    else
        t.region = points_from_json(c.at("points"));
    return t;
}

}  // namespace tilecount

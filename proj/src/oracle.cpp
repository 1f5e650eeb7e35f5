#include "tilecount/oracle.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace tilecount {

namespace {

// Backtracking state over an index-mapped copy of C. Every point of C is
// covered exactly once; the lexicographically smallest uncovered point is
// resolved at each node, so each tiling is reached by a unique branch path.
struct Searcher {
    std::uint64_t alpha;
    const PointSet& c;
    std::uint64_t node_cap;
    std::map<Point, std::size_t> index_of;
    std::vector<bool> covered;
    std::size_t covered_count = 0;
    std::vector<Point> tile;    // A, kept sorted by construction order
    std::vector<Point> trans;   // B, contains the origin
    std::uint64_t nodes = 0;
    std::vector<TilingPair> results;

    Searcher(std::uint64_t a, const PointSet& c_, std::uint64_t cap)
        : alpha(a), c(c_), node_cap(cap), covered(c_.size(), false) {
        for (std::size_t i = 0; i < c.size(); ++i) index_of.emplace(c[i], i);
        trans.push_back(Point(c.dim(), 0));  // canonical B contains the origin
    }

    bool in_c(const Point& p) const { return index_of.count(p) != 0; }

    // Marks A+B additions; returns false (and rolls back nothing) if a point
    // falls outside C or is already covered. `touched` records indices set.
    bool cover(const std::vector<Point>& pts, std::vector<std::size_t>& touched) {
        for (const auto& p : pts) {
            auto it = index_of.find(p);
            if (it == index_of.end() || covered[it->second]) return false;
            covered[it->second] = true;
            ++covered_count;
            touched.push_back(it->second);
        }
        return true;
    }

    void uncover(const std::vector<std::size_t>& touched) {
        for (std::size_t i : touched) covered[i] = false;
        covered_count -= touched.size();
    }

    static Point add(const Point& a, const Point& b) {
        Point out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    }

    static Point sub(const Point& a, const Point& b) {
        Point out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
        return out;
    }

    void search() {
        if (++nodes > node_cap)
            throw WorkCapExceeded("brute_force_tilings: node budget exceeded");
        if (covered_count == c.size()) {
            if (tile.size() == alpha) {
                PointSet a(c.dim(), tile);
                PointSet b(c.dim(), trans);
                results.push_back(TilingPair{a, b, c});
            }
            return;
        }
        if (tile.size() == alpha &&
            (c.size() - covered_count) % alpha != 0)
            return;

        std::size_t p_idx = 0;
        while (covered[p_idx]) ++p_idx;
        const Point& p = c[p_idx];

        // Branch 1: p joins A.
        if (tile.size() < alpha) {
            std::vector<Point> added;
            added.reserve(trans.size());
            for (const auto& b : trans) added.push_back(add(p, b));
            std::vector<std::size_t> touched;
            if (cover(added, touched)) {
                tile.push_back(p);
                search();
                tile.pop_back();
            }
            uncover(touched);
        }

        // Branch 2: p = a + b for an existing a and a new translation b.
        // Canonical form keeps every b componentwise nonnegative.
        for (const auto& a : tile) {
            const Point b = sub(p, a);
            if (std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x < 0; }))
                continue;
            if (std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0; }))
                continue;  // would mean p is already covered
            if (std::find(trans.begin(), trans.end(), b) != trans.end()) continue;
            std::vector<Point> added;
            added.reserve(tile.size());
            for (const auto& a2 : tile) added.push_back(add(a2, b));
            std::vector<std::size_t> touched;
            if (cover(added, touched)) {
                trans.push_back(b);
                search();
                trans.pop_back();
            }
            uncover(touched);
        }
    }
};

}  // namespace

std::vector<TilingPair> brute_force_tilings(std::uint64_t alpha, const PointSet& c,
                                            std::uint64_t node_cap) {
    if (alpha == 0 || c.empty())
        throw std::invalid_argument("brute_force_tilings: need alpha >= 1, |C| >= 1");
    if (c.size() % alpha != 0) return {};
    Searcher s(alpha, c, node_cap);
    // The lex-smallest point of C is always covered by a + 0 with a in A,
    // so the first decision is forced into branch 1.
    s.search();
    return std::move(s.results);
}

ProbeReport conjecture_probe(std::uint64_t alpha, std::uint64_t n,
                             std::uint64_t window, std::uint64_t subset_cap,
                             std::uint64_t node_cap) {
    if (n == 0 || window == 0 || n > window)
        throw std::invalid_argument("conjecture_probe: need 1 <= n <= window");
    // All C with 1 in C and |C| = n: choose the remaining n-1 from [2,window].
    mpz_class feasible;
    mpz_bin_uiui(feasible.get_mpz_t(), window - 1, n - 1);
    if (feasible > subset_cap)
        throw WorkCapExceeded("conjecture_probe: subset budget exceeded");

    ProbeReport report;
    report.alpha = alpha;
    report.n = n;
    report.window = window;
    report.interval_count = count_full(alpha, n);
    report.max_count = 0;

    std::vector<std::int64_t> members(n);
    // Lexicographic combinations over [2,window], with 1 always included.
    std::vector<std::uint64_t> pick(n - 1);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = 2 + i;
    for (;;) {
        members[0] = 1;
        for (std::size_t i = 0; i < pick.size(); ++i)
            members[i + 1] = static_cast<std::int64_t>(pick[i]);
        const PointSet c = PointSet::from_values(members);
        const Count found = brute_force_tilings(alpha, c, node_cap).size();
        ++report.sets_scanned;
        if (found > report.max_count) {
            report.max_count = found;
            report.argmax_c = c.values();
        }
        if (found > report.interval_count) report.violations.push_back(c.values());

        // next combination
        if (pick.empty()) break;
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (pick[i] < window - (pick.size() - 1 - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return report;
        }
        if (pick.empty()) break;
    }
    return report;
}

nlohmann::json probe_report_to_json(const ProbeReport& report) {
    nlohmann::json j;
    j["alpha"] = report.alpha;
    j["n"] = report.n;
    j["window"] = report.window;
    j["interval_count"] = report.interval_count.get_str();
    j["max_count"] = report.max_count.get_str();
    j["argmax_C"] = report.argmax_c;
    j["violations"] = report.violations;
    j["sets_scanned"] = report.sets_scanned;
    return j;
}

}  // namespace tilecount

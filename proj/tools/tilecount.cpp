// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 work cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "tilecount/bounds.hpp"
#include "tilecount/core.hpp"
#include "tilecount/counting.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/multidim.hpp"
#include "tilecount/numtheory.hpp"
#include "tilecount/oracle.hpp"
#include "tilecount/subtile.hpp"

using namespace tilecount;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kWorkCap = 3;

void print_count(const Count& c) {
    std::cout << c.get_str();
    const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
    if (bits > 64) std::cout << " (" << bits << " bits)";
    std::cout << "\n";
}

// Runs fn(i) for i in [0, total); sequential when jobs <= 1.
void parallel_for(std::uint64_t total, unsigned jobs,
                  const std::function<void(std::uint64_t)>& fn) {
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::atomic<std::uint64_t> next{0};
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= total) return;
                fn(i);
            }
        });
    for (auto& t : workers) t.join();
}

int run_count(std::uint64_t alpha, std::uint64_t n,
              const std::vector<std::uint64_t>& dims, const std::string& method) {
    if (!dims.empty()) {
        const BoxShape box(dims);
        const Count formula = count_box_total(alpha, box);
        if (method == "oracle" || method == "all") {
            const Count oracle(
                static_cast<unsigned long>(brute_force_tilings(alpha, box.points()).size()));
            if (method == "oracle") {
                print_count(oracle);
                return kOk;
            }
            if (oracle != formula) {
                std::cerr << "mismatch: formula " << formula.get_str() << ", oracle "
                          << oracle.get_str() << "\n";
                return kVerifyFail;
            }
        }
        print_count(formula);
        return kOk;
    }

    if (method == "psi") {
        print_count(count_full(alpha, n));
        return kOk;
    }
    if (method == "ie") {
        print_count(count_ie(alpha, n));
        return kOk;
    }
    if (method == "oracle") {
        print_count(Count(static_cast<unsigned long>(
            brute_force_tilings(alpha, BoxShape({n}).points()).size())));
        return kOk;
    }
    const Count psi_c = count_full(alpha, n);
    const Count ie_c = count_ie(alpha, n);
    if (psi_c != ie_c) {
        std::cerr << "mismatch: psi " << psi_c.get_str() << ", ie " << ie_c.get_str()
                  << "\n";
        return kVerifyFail;
    }
    if (n <= 48) {
        const Count oracle(static_cast<unsigned long>(
            brute_force_tilings(alpha, BoxShape({n}).points()).size()));
        if (oracle != psi_c) {
            std::cerr << "mismatch: formula " << psi_c.get_str() << ", oracle "
                      << oracle.get_str() << "\n";
            return kVerifyFail;
        }
    }
    print_count(psi_c);
    return kOk;
}

// Ordered tuples (a_1,...,a_d) with product alpha and a_i | sides[i].
void divisor_profiles(std::uint64_t alpha, const std::vector<std::uint64_t>& sides,
                      std::size_t axis, std::vector<std::uint64_t>& cur,
                      std::vector<std::vector<std::uint64_t>>& out) {
    if (axis == sides.size()) {
        if (alpha == 1) out.push_back(cur);
        return;
    }
    for (std::uint64_t a : divisors(sides[axis])) {
        if (alpha % a != 0) continue;
        cur.push_back(a);
        divisor_profiles(alpha / a, sides, axis + 1, cur, out);
        cur.pop_back();
    }
}

int run_enumerate(std::uint64_t alpha, std::uint64_t n,
                  const std::vector<std::uint64_t>& dims, std::uint64_t limit,
                  const std::string& format) {
    std::vector<TilingPair> tilings;
    bool truncated = false;
    if (!dims.empty()) {
        const BoxShape box(dims);
        std::vector<std::vector<std::uint64_t>> profiles;
        std::vector<std::uint64_t> cur;
        divisor_profiles(alpha, box.sides, 0, cur, profiles);
        for (const auto& profile : profiles) {
            for (auto& t : enumerate_box(profile, box, limit)) {
                tilings.push_back(std::move(t));
                if (tilings.size() >= limit) {
                    truncated = true;
                    break;
                }
            }
            if (truncated) break;
        }
    } else {
        auto r = enumerate_interval(alpha, n, limit);
        tilings = std::move(r.tilings);
        truncated = r.truncated;
    }
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& t : tilings) out.push_back(to_json(t));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& t : tilings) std::cout << to_text(t) << "\n";
    }
    if (truncated) {
        std::cerr << "enumeration truncated at limit " << limit << "\n";
        return kWorkCap;
    }
    return kOk;
}

int run_sequence(std::uint64_t max_n, unsigned jobs) {
    std::vector<Count> totals(max_n + 1);
    parallel_for(max_n, jobs,
                 [&](std::uint64_t i) { totals[i + 1] = total_count(i + 1); });
    std::vector<Count> rec(max_n + 1);
    bool ok = true;
    std::cout << "n,total_count,divisor_recurrence,match\n";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        Count acc = 1;
        for (std::uint64_t d : divisors(n))
            if (d < n) acc += rec[d];
        rec[n] = acc;
        const bool match = totals[n] == rec[n];
        ok = ok && match;
        std::cout << n << ',' << totals[n].get_str() << ',' << rec[n].get_str() << ','
                  << (match ? 1 : 0) << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

int run_bounds(std::uint64_t max_n, unsigned jobs) {
    std::atomic<std::uint64_t> upper_violations{0};
    std::atomic<std::uint64_t> order_violations{0};
    std::vector<std::string> upper_rows(max_n);
    std::vector<std::string> order_rows(max_n);
    parallel_for(max_n, jobs, [&](std::uint64_t i) {
        const std::uint64_t n = i + 1;
        for (std::uint64_t alpha : divisors(n)) {
            const Count c = count_full(alpha, n);
            const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
            const bool upper = upper_bound_holds(alpha, n);
            if (!upper) ++upper_violations;
            upper_rows[i] += std::to_string(n) + ',' + std::to_string(alpha) + ',' +
                             std::to_string(bits) + ',' +
                             std::to_string(upper_bound_log2(alpha, n)) + ',' +
                             (upper ? "1" : "0") + "\n";
            if (alpha == 1) continue;
            for (auto [p, e] : factorize(alpha).factors) {
                const OrderVerdict v = partial_order_check(alpha, n, p);
                if (v == OrderVerdict::HypothesesFail) continue;
                if (v == OrderVerdict::Violation) ++order_violations;
                order_rows[i] += std::to_string(n) + ',' + std::to_string(alpha) +
                                 ',' + std::to_string(p) + ',' +
                                 (v == OrderVerdict::Holds ? "1" : "0") + "\n";
            }
        }
    });
    std::cout << "n,alpha,count_bits,bound_log2,verdict\n";
    for (const auto& rows : upper_rows) std::cout << rows;
    std::cout << "n,alpha,p_j,verdict\n";
    for (const auto& rows : order_rows) std::cout << rows;
    nlohmann::json summary;
    summary["max_n"] = max_n;
    summary["upper_violations"] = upper_violations.load();
    summary["order_violations"] = order_violations.load();
    std::cout << summary.dump() << "\n";
    return upper_violations == 0 && order_violations == 0 ? kOk : kVerifyFail;
}

void print_family(const FamilyReport& r) {
    std::cout << "k,m,alpha,n,count,log2_count_per_k,log2_count_per_log2_n,holds\n"
              << r.k << ',' << r.m << ',' << r.alpha << ',' << r.n << ','
              << r.count.get_str() << ',' << r.exponent_per_k << ',' << r.log_ratio
              << ',' << (r.holds ? 1 : 0) << "\n";
}

int run_family(const std::string& kind, std::uint64_t k, std::uint64_t m) {
    if (kind == "2k") {
        const auto r = family_2k(k);
        print_family(r);
        return r.holds ? kOk : kVerifyFail;
    }
    if (kind == "ie9") {
        bool ok = true;
        std::cout << "k,alpha,holds\n";
        for (std::uint64_t j = 0; j <= k / 2; ++j) {
            const std::uint64_t alpha = 3 * (std::uint64_t{1} << j);
            const bool h = ie2k9_check(k, alpha);
            ok = ok && h;
            std::cout << k << ',' << alpha << ',' << (h ? 1 : 0) << "\n";
        }
        return ok ? kOk : kVerifyFail;
    }
    if (kind == "general") {
        const auto [n, alpha] = lower_family_params(m, k);
        (void)n;
        if (alpha % nth_prime(static_cast<unsigned>(m)) != 0) {
            std::cerr << "hypotheses fail: p_m does not divide alpha\n";
            return kUsage;
        }
        const bool h = ie_general_check(m, k, alpha);
        std::cout << "m,k,alpha,holds\n" << m << ',' << k << ',' << alpha << ','
                  << (h ? 1 : 0) << "\n";
        return h ? kOk : kVerifyFail;
    }
    const auto r = lower_family_report(m, k);
    print_family(r);
    return kOk;
}

int run_subtile(std::uint64_t alpha, std::uint64_t n, std::uint64_t alpha_prime,
                unsigned jobs) {
    if (n % alpha != 0 || alpha % alpha_prime != 0) {
        std::cerr << "need alpha' | alpha | n\n";
        return kUsage;
    }
    const auto tilings = enumerate_interval(alpha, n).tilings;
    std::vector<SubtileVerdict> verdicts(tilings.size());
    parallel_for(tilings.size(), jobs, [&](std::uint64_t i) {
        verdicts[i] = subtile_bound_check(alpha_prime, tilings[i].tile,
                                          tilings[i].translations, n);
    });
    bool ok = true;
    std::cout << "tile,tilings_of_tile,tilings_of_interval,bound_holds,injective\n";
    for (std::size_t i = 0; i < tilings.size(); ++i) {
        const auto& v = verdicts[i];
        ok = ok && v.bound_holds && v.injective;
        std::cout << '"' << to_text(tilings[i]) << "\","
                  << v.tilings_of_tile.get_str() << ','
                  << v.tilings_of_interval.get_str() << ',' << (v.bound_holds ? 1 : 0)
                  << ',' << (v.injective ? 1 : 0) << "\n";
    }
    return ok ? kOk : kVerifyFail;
}

int run_probe(std::uint64_t alpha, std::uint64_t n, std::uint64_t window) {
    const auto r = conjecture_probe(alpha, n, window);
    std::cout << probe_report_to_json(r).dump(2) << "\n";
    if (!r.violations.empty()) {
        std::cerr << "conjecture violation found: " << r.violations.size()
                  << " region(s) beat the interval\n";
        return kVerifyFail;
    }
    return kOk;
}

int run_selftest() {
    bool ok = true;
    const auto require = [&](bool cond, const std::string& what) {
        std::cout << (cond ? "pass" : "FAIL") << ": " << what << "\n";
        ok = ok && cond;
    };

    require(count_full(2, 4) == 2, "|T(2,[4])| = 2");
    require(count_box_total(2, BoxShape({3, 2})) == 1 && count_full(2, 6) == 2,
            "box(3,2) vs [6] strict inequality");

    bool agree = true;
    for (std::uint64_t n = 1; n <= 36 && agree; ++n)
        for (std::uint64_t alpha : divisors(n)) {
            const Count c = count_full(alpha, n);
            if (c != count_ie(alpha, n) ||
                c != Count(static_cast<unsigned long>(
                         brute_force_tilings(alpha, BoxShape({n}).points()).size())) ||
                c != Count(static_cast<unsigned long>(
                         enumerate_interval(alpha, n).tilings.size()))) {
                agree = false;
                break;
            }
        }
    require(agree, "psi = ie = oracle = enumeration, n <= 36");

    bool seq = true;
    std::vector<Count> rec(1001);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        Count acc = 1;
        for (std::uint64_t d : divisors(n))
            if (d < n) acc += rec[d];
        rec[n] = acc;
        if (total_count(n) != rec[n]) seq = false;
    }
    require(seq, "divisor recurrence, n <= 1000");

    bool upper = true;
    for (std::uint64_t n = 1; n <= 1000 && upper; ++n)
        for (std::uint64_t alpha : divisors(n))
            if (!upper_bound_holds(alpha, n)) upper = false;
    require(upper, "upper bound, n <= 1000");

    bool fam = true;
    for (std::uint64_t k = 1; k <= 20; ++k)
        if (!family_2k(k).holds) fam = false;
    require(fam, "2^k family, k <= 20");

    bool sub = true;
    for (std::uint64_t n = 1; n <= 24 && sub; ++n)
        for (std::uint64_t alpha : divisors(n))
            for (const auto& t : enumerate_interval(alpha, n).tilings)
                for (std::uint64_t ap : divisors(alpha)) {
                    const auto v = subtile_bound_check(ap, t.tile, t.translations, n);
                    if (!v.bound_holds || !v.injective) sub = false;
                }
    require(sub, "subtile bound, n <= 24");

    require(conjecture_probe(2, 4, 8).violations.empty(), "probe alpha=2, n=4, window=8");

    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact counting and enumeration of translational tilings of discrete "
        "boxes.\nCSV columns are printed as a header line by each sweep "
        "subcommand.\nThe TILECOUNT_CACHE environment variable names an optional "
        "memo-cache file\nloaded on start and saved on exit."};
    app.require_subcommand(1);

    std::uint64_t alpha = 1, n = 0, window = 0, limit = 1000000, k = 1, m = 1,
                  max_n = 100, alpha_prime = 1;
    std::vector<std::uint64_t> dims;
    std::string method = "psi", format = "text", kind = "2k";
    unsigned jobs = 1;

    auto* count_cmd = app.add_subcommand("count", "Count tilings of [n] or a box");
    count_cmd->add_option("--alpha", alpha, "Tile size |A|")->required();
    count_cmd->add_option("--n", n, "Interval length");
    count_cmd->add_option("--dims", dims, "Box side lengths")->delimiter(',');
    count_cmd->add_option("--method", method, "psi|ie|oracle|all")
        ->check(CLI::IsMember({"psi", "ie", "oracle", "all"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "List tilings");
    enum_cmd->add_option("--alpha", alpha, "Tile size |A|")->required();
    enum_cmd->add_option("--n", n, "Interval length");
    enum_cmd->add_option("--dims", dims, "Box side lengths")->delimiter(',');
    enum_cmd->add_option("--limit", limit, "Maximum tilings to emit");
    enum_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* seq_cmd =
        app.add_subcommand("sequence", "total_count vs divisor recurrence, CSV "
                                       "(n,total_count,divisor_recurrence,match)");
    seq_cmd->add_option("--max", max_n, "Largest n")->required();
    seq_cmd->add_option("--jobs", jobs, "Worker threads");

    auto* bounds_cmd =
        app.add_subcommand("bounds",
                           "Upper-bound sweep CSV (n,alpha,count_bits,bound_log2,"
                           "verdict), partial-order sweep CSV (n,alpha,p_j,verdict), "
                           "then a JSON summary line");
    bounds_cmd->add_option("--max-n", max_n, "Largest n")->required();
    bounds_cmd->add_option("--jobs", jobs, "Worker threads");

    auto* family_cmd = app.add_subcommand("family", "Lower-bound family reports");
    family_cmd->add_option("--kind", kind, "2k|ie9|general|lower")
        ->check(CLI::IsMember({"2k", "ie9", "general", "lower"}))
        ->required();
    family_cmd->add_option("--k", k, "Exponent of 2")->required();
    family_cmd->add_option("--m", m, "Number of primes");

    auto* subtile_cmd =
        app.add_subcommand("subtile", "Sweep subtile bound over T(alpha,[n])");
    subtile_cmd->add_option("--n", n, "Interval length")->required();
    subtile_cmd->add_option("--alpha", alpha, "Ambient tile size")->required();
    subtile_cmd->add_option("--alpha-prime", alpha_prime, "Sub-tile size")->required();
    subtile_cmd->add_option("--jobs", jobs, "Worker threads");

    auto* probe_cmd = app.add_subcommand("probe", "Conjecture probe over windows");
    probe_cmd->add_option("--alpha", alpha, "Tile size |A|")->required();
    probe_cmd->add_option("--n", n, "Region size |C|")->required();
    probe_cmd->add_option("--window", window, "Scan window")->required();

    app.add_subcommand("selftest", "Invariant suite at desk-scale parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const char* cache = std::getenv("TILECOUNT_CACHE");
    if (cache && *cache) {
        std::ifstream probe_file(cache);
        if (probe_file.good()) load_count_cache(cache);
    }

    int rc = kUsage;
    try {
        if (count_cmd->parsed()) {
            if (dims.empty() && n == 0) {
                std::cerr << "count: need --n or --dims\n";
                return kUsage;
            }
            rc = run_count(alpha, n, dims, method);
        } else if (enum_cmd->parsed()) {
            if (dims.empty() && n == 0) {
                std::cerr << "enumerate: need --n or --dims\n";
                return kUsage;
            }
            rc = run_enumerate(alpha, n, dims, limit, format);
        } else if (seq_cmd->parsed()) {
            rc = run_sequence(max_n, jobs);
        } else if (bounds_cmd->parsed()) {
            rc = run_bounds(max_n, jobs);
        } else if (family_cmd->parsed()) {
            rc = run_family(kind, k, m);
        } else if (subtile_cmd->parsed()) {
            rc = run_subtile(alpha, n, alpha_prime, jobs);
        } else if (probe_cmd->parsed()) {
            rc = run_probe(alpha, n, window);
        } else {
            rc = run_selftest();
        }
    } catch (const WorkCapExceeded& e) {
        std::cerr << "work cap exceeded: " << e.what() << "\n";
        rc = kWorkCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        rc = kUsage;
    }

    if (cache && *cache && rc == kOk) save_count_cache(cache);
    return rc;
}

#include "tilecount/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "tilecount/numtheory.hpp"

namespace tilecount {

namespace {

enum class Restriction : std::uint8_t { Full = 0, FirstSegmentOne = 1, InclExcl = 2 };

struct Key {
    std::uint64_t alpha;
    std::uint64_t n;
    Restriction restriction;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = std::hash<std::uint64_t>{}(k.alpha);
        h ^= std::hash<std::uint64_t>{}(k.n) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.restriction) + (h << 6) + (h >> 2);
        return h;
    }
};

std::mutex memo_mutex;
std::unordered_map<Key, Count, KeyHash> memo;

std::optional<Count> memo_get(const Key& k) {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find(k);
    if (it == memo.end()) return std::nullopt;
    return it->second;
}

void memo_put(const Key& k, const Count& v) {
    std::lock_guard lock(memo_mutex);
    memo.emplace(k, v);  // idempotent: values are deterministic
}

}  // namespace

std::vector<std::uint64_t> segment_options(std::uint64_t alpha) {
    return divisors(alpha);
}

std::vector<std::uint64_t> rift_options(std::uint64_t k_s, std::uint64_t alpha,
                                        std::uint64_t beta) {
    if (k_s == 0 || alpha % k_s != 0)
        throw std::invalid_argument("rift_options: k_s must divide alpha");
    if (k_s == alpha) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors(beta))
        if (d >= 2) out.push_back(k_s * (d - 1));
    return out;
}

Count count_full(std::uint64_t alpha, std::uint64_t n) {
    if (alpha == 0 || n == 0)
        throw std::invalid_argument("count_full: alpha and n must be positive");
    if (n % alpha != 0) return 0;
    const std::uint64_t beta = n / alpha;
    // |T(alpha,[n])| = |T(beta,[n])|, so normalize the memo key.
    const Key key{std::min(alpha, beta), n, Restriction::Full};
    if (auto hit = memo_get(key)) return *hit;

    Count total = 0;
    for (std::uint64_t k_s : segment_options(alpha))
        for (std::uint64_t k_r : rift_options(k_s, alpha, beta))
            total += psi(alpha, n, k_s, k_r);
    memo_put(key, total);
    return total;
}

Count count_restricted(std::uint64_t alpha, std::uint64_t n) {
    if (alpha == 0 || n == 0)
        throw std::invalid_argument("count_restricted: alpha and n must be positive");
    if (n % alpha != 0) return 0;
    if (alpha == 1) return 1;  // A = {1} has k_s = 1
    const Key key{alpha, n, Restriction::FirstSegmentOne};
    if (auto hit = memo_get(key)) return *hit;

    Count total = 0;
    for (std::uint64_t k_r : rift_options(1, alpha, n / alpha))
        total += psi(alpha, n, 1, k_r);
    memo_put(key, total);
    return total;
}

Count psi(std::uint64_t alpha, std::uint64_t n, std::uint64_t k_s,
          std::uint64_t k_r) {
    if (n % alpha != 0) return 0;
    if (alpha % k_s != 0)
        throw std::invalid_argument("psi: k_s not in the segment options");
    const auto opts = rift_options(k_s, alpha, n / alpha);
    if (std::find(opts.begin(), opts.end(), k_r) == opts.end())
        throw std::invalid_argument("psi: k_r not in the rift options");
    if (k_r == 0) return 1;
    const std::uint64_t sub_alpha = alpha / k_s;
    const std::uint64_t sub_n = n / (k_s + k_r);
    return count_full(sub_alpha, sub_n) - count_restricted(sub_alpha, sub_n);
}

Count count_by_pair(std::uint64_t alpha, std::uint64_t n, std::uint64_t k_s,
                    std::uint64_t k_r) {
    return psi(alpha, n, k_s, k_r);
}

Count count_ie(std::uint64_t alpha, std::uint64_t n) {
    if (alpha == 0 || n == 0)
        throw std::invalid_argument("count_ie: alpha and n must be positive");
    if (n % alpha != 0) return 0;
    if (n == 1) return 1;  // alpha == 1 here
    const Key key{alpha, n, Restriction::InclExcl};
    if (auto hit = memo_get(key)) return *hit;

    Count total = 0;
    const unsigned primes = omega(n);
    for (unsigned k = 1; k <= primes; ++k) {
        const int sign = (k % 2 == 1) ? 1 : -1;
        for (std::uint64_t v : squarefree_products(n, k)) {
            Count term = 0;
            if ((n / v) % alpha == 0) term += count_ie(alpha, n / v);
            if (alpha % v == 0) term += count_ie(alpha / v, n / v);
            total += sign * term;
        }
    }
    memo_put(key, total);
    return total;
}

Count total_count(std::uint64_t n) {
    Count total = 0;
    for (std::uint64_t alpha : divisors(n)) total += count_full(alpha, n);
    return total;
}

void save_count_cache(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_count_cache: cannot open " + path);
    std::lock_guard lock(memo_mutex);
    for (const auto& [key, value] : memo)
        out << key.alpha << ',' << key.n << ','
            << static_cast<unsigned>(key.restriction) << ',' << value.get_str()
            << '\n';
}

void load_count_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_count_cache: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Key key{};
        char* end = nullptr;
        key.alpha = std::strtoull(line.c_str(), &end, 10);
        key.n = std::strtoull(end + 1, &end, 10);
        key.restriction = static_cast<Restriction>(std::strtoul(end + 1, &end, 10));
        memo_put(key, Count(end + 1));
    }
}

void clear_count_cache() {
    std::lock_guard lock(memo_mutex);
    memo.clear();
}

}  // namespace tilecount

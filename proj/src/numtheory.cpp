#include "tilecount/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tilecount {

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (m > 1) f.factors.emplace_back(m, 1u);
    return f;
}

namespace {
std::mutex divisor_cache_mutex;
std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> divisor_cache;
}  // namespace

const std::vector<std::uint64_t>& divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    {
        std::lock_guard lock(divisor_cache_mutex);
        auto it = divisor_cache.find(n);
        if (it != divisor_cache.end()) return it->second;
    }
    const Factorization f = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::lock_guard lock(divisor_cache_mutex);
    return divisor_cache.emplace(n, std::move(divs)).first->second;
}

std::uint64_t sigma0(std::uint64_t n) { return divisors(n).size(); }

unsigned omega(std::uint64_t n) {
    return static_cast<unsigned>(factorize(n).factors.size());
}

unsigned big_omega(std::uint64_t n) {
    unsigned total = 0;
    for (const auto& [p, e] : factorize(n).factors) total += e;
    return total;
}

std::set<std::uint64_t> squarefree_products(std::uint64_t n, unsigned k) {
    const Factorization f = factorize(n);
    std::set<std::uint64_t> out;
    const unsigned m = static_cast<unsigned>(f.factors.size());
    if (k > m) return out;
    // n has at most ~13 distinct prime factors at desk scale; subset walk is fine.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
        std::uint64_t prod = 1;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) prod *= f.factors[i].first;
        out.insert(prod);
    }
    return out;
}

std::uint64_t nth_prime(unsigned i) {
    if (i == 0) throw std::invalid_argument("nth_prime: index is 1-based");
    std::uint64_t candidate = 1;
    for (unsigned found = 0; found < i;) {
        ++candidate;
        if (factorize(candidate).factors.size() == 1 &&
            factorize(candidate).factors[0].second == 1)
            ++found;
    }
    return candidate;
}

}  // namespace tilecount

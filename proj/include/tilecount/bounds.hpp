#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilecount/counting.hpp"

namespace tilecount {

// log2 of the divisor-product upper bound on |T(alpha,[n])|:
// log2(n) * log2(sigma0(alpha)*sigma0(beta) - sigma0(alpha) - sigma0(beta) + 2).
double upper_bound_log2(std::uint64_t alpha, std::uint64_t n);

// Exact check that count_full(alpha,n) <= base^(log2 n), done with integer
// powers so float rounding cannot flip the verdict.
bool upper_bound_holds(std::uint64_t alpha, std::uint64_t n);

// The alpha | n maximizing count_full(alpha,n); ties toward smaller alpha.
std::pair<std::uint64_t, Count> max_count(std::uint64_t n);

enum class OrderVerdict { HypothesesFail, Holds, Violation };

// Checks count_full(alpha/p_j, n) < count_full(alpha, n) under the
// hypothesis that every prime exponent of alpha is at most half the
// matching exponent of n.
OrderVerdict partial_order_check(std::uint64_t alpha, std::uint64_t n,
                                 std::uint64_t p_j);

struct FamilyReport {
    std::uint64_t k = 0;
    std::uint64_t m = 1;
    std::uint64_t alpha = 0;
    std::uint64_t n = 0;
    Count count;
    double exponent_per_k = 0.0;   // log2(count) / k
    double log_ratio = 0.0;        // log2(count) / log2(n)
    bool holds = true;
};

// count(2^floor(k/2), [2^k]) > 1.5^(k-2), compared exactly.
FamilyReport family_2k(std::uint64_t k);

// count(a,[2^k*9]) >= count(a,[2^(k-1)*9]) + count(a/2,[2^(k-1)*9]) + count(a/3,[2^k])
// for 3 | a, 9 does not divide a.
bool ie2k9_check(std::uint64_t k, std::uint64_t alpha);

// The general three-term splitting inequality over the first m primes.
bool ie_general_check(std::uint64_t m, std::uint64_t k, std::uint64_t alpha);

// The lower-bound family n = 2^k * prod_{i=2}^m p_i^2, alpha = 2^floor(k/2) * prod p_i.
FamilyReport lower_family_report(std::uint64_t m, std::uint64_t k);

// n and alpha of the lower-bound family.
std::pair<std::uint64_t, std::uint64_t> lower_family_params(std::uint64_t m,
                                                            std::uint64_t k);

}  // namespace tilecount

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tilecount {

using Count = mpz_class;

// Divisors of alpha: the admissible first-segment sizes.
std::vector<std::uint64_t> segment_options(std::uint64_t alpha);

// Admissible first-rift sizes for a given k_s | alpha and beta = n / alpha:
// {0} when k_s = alpha, otherwise {k_s*(d-1) : d | beta, d >= 2}.
std::vector<std::uint64_t> rift_options(std::uint64_t k_s, std::uint64_t alpha,
                                        std::uint64_t beta);

// The per-(k_s,k_r) case count: 0 if alpha does not divide n, 1 if k_r = 0,
// otherwise |T(alpha/k_s,[n/(k_s+k_r)])| - |T(alpha/k_s,[n/(k_s+k_r)],(1,.))|.
Count psi(std::uint64_t alpha, std::uint64_t n, std::uint64_t k_s,
          std::uint64_t k_r);

// |T(alpha,[n])| by the memoized segment/rift recursion.
Count count_full(std::uint64_t alpha, std::uint64_t n);

// |T(alpha,[n],(1,.))|: tilings whose first segment has size 1.
Count count_restricted(std::uint64_t alpha, std::uint64_t n);

// Number of tilings with first segment/rift sizes exactly (k_s,k_r).
Count count_by_pair(std::uint64_t alpha, std::uint64_t n, std::uint64_t k_s,
                    std::uint64_t k_r);

// |T(alpha,[n])| by inclusion-exclusion over products of distinct prime
// divisors of n; independent recursion and memo from count_full.
Count count_ie(std::uint64_t alpha, std::uint64_t n);

// Sum of count_full(alpha, n) over all alpha | n (OEIS A067824).
Count total_count(std::uint64_t n);

// Optional flat-file persistence of the memo tables:
// one `alpha,n,restriction,value` line per entry, decimal.
void save_count_cache(const std::string& path);
void load_count_cache(const std::string& path);
void clear_count_cache();

}  // namespace tilecount

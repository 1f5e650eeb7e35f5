#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace tilecount {

// Prime factorization of a positive integer, primes in increasing order.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, exponent)
};

// Trial division; inputs are desk-scale (<= ~2^40), rejects n == 0.
Factorization factorize(std::uint64_t n);

// All positive divisors in increasing order. Results are cached per n;
// the cache tolerates concurrent callers.
const std::vector<std::uint64_t>& divisors(std::uint64_t n);

std::uint64_t sigma0(std::uint64_t n);    // number of divisors
unsigned omega(std::uint64_t n);          // distinct prime factors
unsigned big_omega(std::uint64_t n);      // prime factors with multiplicity

// Products of exactly k distinct prime divisors of n. k = 0 gives {1};
// empty when k exceeds omega(n).
std::set<std::uint64_t> squarefree_products(std::uint64_t n, unsigned k);

// The i-th prime, 1-based (nth_prime(1) == 2). Desk-scale only.
std::uint64_t nth_prime(unsigned i);

}  // namespace tilecount

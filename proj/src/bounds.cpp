#include "tilecount/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "tilecount/numtheory.hpp"

namespace tilecount {

namespace {

std::uint64_t bound_base(std::uint64_t alpha, std::uint64_t n) {
    if (n % alpha != 0)
        throw std::invalid_argument("upper_bound: alpha must divide n");
    const std::uint64_t sa = sigma0(alpha);
    const std::uint64_t sb = sigma0(n / alpha);
    return sa * sb - sa - sb + 2;  // = (sa-1)(sb-1) + 1 >= 1
}

}  // namespace

double upper_bound_log2(std::uint64_t alpha, std::uint64_t n) {
    return std::log2(static_cast<double>(n)) *
           std::log2(static_cast<double>(bound_base(alpha, n)));
}

bool upper_bound_holds(std::uint64_t alpha, std::uint64_t n) {
    const Count count = count_full(alpha, n);
    if (count <= 1) return true;
    const std::uint64_t base = bound_base(alpha, n);
    if (base == 1) return false;  // count > 1 but bound is exactly 1

    // Fast path: a whole-bit margin in doubles is safe at these magnitudes.
    const double bound = upper_bound_log2(alpha, n);
    const double count_bits = static_cast<double>(mpz_sizeinbase(count.get_mpz_t(), 2));
    if (count_bits + 1.0 < bound) return true;

    // Exact path: verify count^q <= base^p for p/q <= log2(n), which implies
    // count <= base^(log2 n). Take q = 64 and p = floor(q * log2 n) computed
    // as bitlen(n^64) - 1.
    constexpr unsigned q = 64;
    Count nq;
    mpz_ui_pow_ui(nq.get_mpz_t(), n, q);
    const std::size_t p = mpz_sizeinbase(nq.get_mpz_t(), 2) - 1;
    Count lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), count.get_mpz_t(), q);
    mpz_ui_pow_ui(rhs.get_mpz_t(), base, static_cast<unsigned long>(p));
    return lhs <= rhs;
}

std::pair<std::uint64_t, Count> max_count(std::uint64_t n) {
    std::uint64_t best_alpha = 1;
    Count best = 0;
    for (std::uint64_t alpha : divisors(n)) {
        const Count c = count_full(alpha, n);
        if (c > best) {
            best = c;
            best_alpha = alpha;
        }
    }
    return {best_alpha, best};
}

OrderVerdict partial_order_check(std::uint64_t alpha, std::uint64_t n,
                                 std::uint64_t p_j) {
    if (alpha % p_j != 0)
        throw std::invalid_argument("partial_order_check: p_j must divide alpha");
    // Hypotheses: alpha = prod p_i^mu_i, n = prod p_i^psi_i, 2*mu_i <= psi_i.
    for (const auto& [p, mu] : factorize(alpha).factors) {
        unsigned psi = 0;
        std::uint64_t m = n;
        while (m % p == 0) {
            m /= p;
            ++psi;
        }
        if (2 * mu > psi) return OrderVerdict::HypothesesFail;
    }
    return count_full(alpha / p_j, n) < count_full(alpha, n)
               ? OrderVerdict::Holds
               : OrderVerdict::Violation;
}

FamilyReport family_2k(std::uint64_t k) {
    FamilyReport report;
    report.k = k;
    report.m = 1;
    report.alpha = std::uint64_t{1} << (k / 2);
    report.n = std::uint64_t{1} << k;
    report.count = count_full(report.alpha, report.n);
    const double bits = mpz_sizeinbase(report.count.get_mpz_t(), 2) > 1
                            ? std::log2(report.count.get_d())
                            : 0.0;
    report.exponent_per_k = bits / static_cast<double>(k);
    report.log_ratio = bits / static_cast<double>(k);

    // count > 1.5^(k-2), i.e. count * 2^(k-2) > 3^(k-2) for k >= 2;
    // for k = 1 the right side is below 1, so any tiling suffices.
    if (k < 2) {
        report.holds = report.count >= 1;
    } else {
        Count lhs = report.count << (k - 2);
        Count rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), 3, static_cast<unsigned long>(k - 2));
        report.holds = lhs > rhs;
    }
    return report;
}

bool ie2k9_check(std::uint64_t k, std::uint64_t alpha) {
    if (k < 1) throw std::invalid_argument("ie2k9_check: k >= 1 required");
    if (alpha % 3 != 0 || alpha % 9 == 0)
        throw std::invalid_argument("ie2k9_check: need 3 | alpha and 9 does not divide alpha");
    const std::uint64_t n = (std::uint64_t{1} << k) * 9;
    const std::uint64_t half = (std::uint64_t{1} << (k - 1)) * 9;
    Count rhs = count_full(alpha, half);
    if (alpha % 2 == 0) rhs += count_full(alpha / 2, half);
    rhs += count_full(alpha / 3, std::uint64_t{1} << k);
    return count_full(alpha, n) >= rhs;
}

std::pair<std::uint64_t, std::uint64_t> lower_family_params(std::uint64_t m,
                                                            std::uint64_t k) {
    std::uint64_t n = std::uint64_t{1} << k;
    std::uint64_t alpha = std::uint64_t{1} << (k / 2);
    for (std::uint64_t i = 2; i <= m; ++i) {
        const std::uint64_t p = nth_prime(static_cast<unsigned>(i));
        n *= p * p;
        alpha *= p;
    }
    return {n, alpha};
}

bool ie_general_check(std::uint64_t m, std::uint64_t k, std::uint64_t alpha) {
    if (m < 1 || k < 1)
        throw std::invalid_argument("ie_general_check: m, k >= 1 required");
    const std::uint64_t p_m = nth_prime(static_cast<unsigned>(m));
    if (alpha % p_m != 0)
        throw std::invalid_argument("ie_general_check: p_m must divide alpha");

    std::uint64_t tail = 1;  // prod_{i=2}^{m} p_i^2
    for (std::uint64_t i = 2; i <= m; ++i) {
        const std::uint64_t p = nth_prime(static_cast<unsigned>(i));
        tail *= p * p;
    }
    std::uint64_t tail_short = 1;  // prod_{i=2}^{m-1} p_i^2; empty range is 0 at m = 1
    for (std::uint64_t i = 2; i + 1 <= m; ++i) {
        const std::uint64_t p = nth_prime(static_cast<unsigned>(i));
        tail_short *= p * p;
    }

    const std::uint64_t n = (std::uint64_t{1} << k) * tail;
    const std::uint64_t n_half = (std::uint64_t{1} << (k - 1)) * tail;
    const std::uint64_t n_pm = (std::uint64_t{1} << k) * tail_short;

    Count rhs = m >= 2 ? count_full(alpha / p_m, n_pm) : Count(0);
    rhs += count_full(alpha, n_half);
    if (alpha % 2 == 0) rhs += count_full(alpha / 2, n_half);
    return count_full(alpha, n) >= rhs;
}

FamilyReport lower_family_report(std::uint64_t m, std::uint64_t k) {
    FamilyReport report;
    report.k = k;
    report.m = m;
    const auto [n, alpha] = lower_family_params(m, k);
    report.n = n;
    report.alpha = alpha;
    report.count = count_full(alpha, n);
    const double bits = report.count > 1 ? std::log2(report.count.get_d()) : 0.0;
    report.exponent_per_k = bits / static_cast<double>(k);
    report.log_ratio = bits / std::log2(static_cast<double>(n));
    return report;
}

}  // namespace tilecount

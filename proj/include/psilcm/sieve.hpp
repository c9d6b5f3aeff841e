#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "psilcm/errors.hpp"

namespace psilcm {

/// Prime infrastructure up to a fixed limit: prime list, smallest-prime-factor
/// lookup, and Chebyshev-psi prefix sums. Immutable after construction and
/// safe to share across threads.
class PrimeTable {
public:
    static constexpr std::uint64_t kDefaultLimitCap = 100'000'000;
    // Full-resolution psi prefix sums are stored up to this bound; larger
    // arguments are answered by a segmented rescan.
    static constexpr std::uint64_t kPsiPrefixCap = 10'000'000;

    explicit PrimeTable(std::uint64_t limit, std::uint64_t cap = kDefaultLimitCap);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // pi(x) for x <= limit.
    std::uint64_t prime_count(std::uint64_t x) const;
    bool is_prime(std::uint64_t p) const;

    // Lambda(m): log p when m = p^k, else 0. Requires m <= limit.
    double von_mangoldt(std::uint64_t m) const;

    // psi(x) = sum_{m<=x} Lambda(m). O(1) for x within the stored prefix,
    // segmented rescan above it. Requires x <= limit.
    double chebyshev_psi(std::uint64_t x) const;

    // Prime factorization, ascending primes. spf walk for a <= limit,
    // trial division by table primes for a <= limit^2 (residual cofactor
    // is then prime). Empty for a = 1.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t a) const;

    std::uint64_t euler_phi(std::uint64_t q) const;

    std::uint32_t smallest_prime_factor(std::uint64_t a) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> spf_;
    std::vector<double> psi_prefix_;  // indices 0..min(limit, kPsiPrefixCap)
};

PrimeTable build_prime_table(std::uint64_t limit,
                             std::uint64_t cap = PrimeTable::kDefaultLimitCap);

// Segmented enumeration of primes in [lo, hi], ascending. Self-contained
// (sieves its own base primes up to sqrt(hi)); memory O(segment).
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn,
                    std::uint64_t segment_size = 1u << 20);

/// One prime power m = p^k together with Lambda(m) = log p.
struct PrimePower {
    std::uint64_t value;
    std::uint64_t prime;
    double log_p;
};

// All prime powers <= n, ascending by value. Requires n <= t.limit().
std::vector<PrimePower> prime_powers_up_to(std::uint64_t n, const PrimeTable& t);

}  // namespace psilcm

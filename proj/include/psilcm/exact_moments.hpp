#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "psilcm/sieve.hpp"

namespace psilcm {

/// One exact-moment computation: parameters, results, and how they were
/// obtained (method tag: direct | grouped | pairwise | oracle).
struct MomentReport {
    std::uint64_t n = 0;
    double delta_or_k = 0.0;
    double expectation = 0.0;
    std::optional<double> second_moment;
    std::optional<double> variance;
    std::string method;
    bool variance_clamped = false;

    // variance = second_moment - expectation^2, clamped to 0 (flagged) when
    // within -1e-9 of zero.
    void derive_variance();
};

// E(psi(A)) in S(n;delta) as the prime-power sum
// sum_{m<=n} Lambda(m) (1 - (1-delta)^{floor(n/m)}).
double expectation_bernoulli_direct(std::uint64_t n, double delta, const PrimeTable& t);

// Same value as delta * sum_{r>=1} psi(floor(n/r)) (1-delta)^{r-1}, truncated
// once the geometric tail is below 1e-12 absolute.
double expectation_bernoulli_grouped(std::uint64_t n, double delta, const PrimeTable& t);

// E(I_m I_l) for prime powers m, l: the joint probability that A contains a
// multiple of each.
double pair_indicator_expectation(std::uint64_t m, std::uint64_t l, std::uint64_t n,
                                  double delta);

// Exact V(psi(A)) in S(n;delta) by the pairwise prime-power double sum.
// Quadratic cost; capped (default 3*10^4).
double variance_bernoulli_exact(std::uint64_t n, double delta, const PrimeTable& t,
                                std::uint64_t pairwise_cap = 30'000);

// Exact mean of psi over uniform size-k subsets, via log-space binomial
// ratios C(n-q,k)/C(n,k).
double expectation_uniform_k(std::uint64_t n, std::uint64_t k, const PrimeTable& t);

// Exact mean of psi^2 over uniform size-k subsets (hypergeometric pair
// probabilities). Quadratic cost; capped (default 5000).
double second_moment_uniform_k(std::uint64_t n, std::uint64_t k, const PrimeTable& t,
                               std::uint64_t pairwise_cap = 5'000);

// 2 e^{-r^2/(4k)}; the tail bound on ||A|-k|.
double chernoff_bound(std::uint64_t k, double r);

// Exact P(||A| - n*delta| >= r) with |A| ~ Binomial(n, delta).
double binomial_tail_exact(std::uint64_t n, double delta, double r,
                           std::uint64_t exact_cap = 10'000);

struct TransferGap {
    double gap;         // |E(psi^s) in S(n;k/n) - mean of psi^s over size-k subsets|
    double normalizer;  // k^{s-1/2} log^{s+1/2} n
};

TransferGap transfer_gap(std::uint64_t n, std::uint64_t k, const PrimeTable& t, int s);

}  // namespace psilcm

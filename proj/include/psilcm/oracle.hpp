#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "psilcm/integer_set.hpp"
#include "psilcm/sieve.hpp"

namespace psilcm {
namespace oracle {

// psi of every subset of {1,...,n}, indexed by bitmask (bit i <-> element i+1).
// Brute-force ground truth; n <= 20.
std::vector<double> psi_over_subsets(std::uint64_t n, const PrimeTable& t);

struct Moments {
    double first;
    double second;  // second raw moment E(psi^2)
};

// (expectation, variance) of psi in S(n;delta) by full 2^n enumeration.
std::pair<double, double> enumerate_bernoulli_moments(std::uint64_t n, double delta,
                                                      const PrimeTable& t);

// (mean, second raw moment) of psi over all size-k subsets. C(n,k) <= 10^6.
std::pair<double, double> enumerate_uniform_k_moments(std::uint64_t n, std::uint64_t k,
                                                      const PrimeTable& t);

// Mean of psi^s over size-k subsets for every k = 0..n in one sweep.
// Row s-1 holds the s-th raw moments.
std::vector<std::vector<double>> uniform_k_moment_table(std::uint64_t n, const PrimeTable& t);

struct ExtremalResult {
    double min_psi;
    std::vector<std::uint64_t> argmin;  // lexicographically smallest witness
    double max_psi;
    std::vector<std::uint64_t> argmax;
};

ExtremalResult extremal_psi_exhaustive(std::uint64_t n, std::uint64_t k, const PrimeTable& t);

}  // namespace oracle
}  // namespace psilcm

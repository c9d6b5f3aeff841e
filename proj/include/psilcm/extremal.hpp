#pragma once

#include <cstdint>
#include <utility>

#include "psilcm/integer_set.hpp"
#include "psilcm/sieve.hpp"

namespace psilcm {

/// Parameters of a constructed smooth set: the minimal prime smoothness
/// bound y reaching the target size, and log y / log log n as the effective
/// exponent t.
struct SmoothSetSpec {
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t y;
    double t_effective;
};

// Psi(x; y): count of y-smooth integers <= x (1 counts as smooth).
std::uint64_t smooth_count(std::uint64_t x, std::uint64_t y, const PrimeTable& t);

// The k smallest y-smooth integers in [1,n], with y the minimal prime such
// that Psi(n;y) >= k (y = 1 when k == 1).
std::pair<IntegerSet, SmoothSetSpec> build_smooth_set(std::uint64_t n, std::uint64_t k,
                                                      const PrimeTable& t);

// psi of the FULL set of y-smooth integers <= n:
// sum_{p<=y} floor(log n/log p) log p.
double psi_smooth_closed_form(std::uint64_t n, std::uint64_t y, const PrimeTable& t);

// k largest primes <= n; if k > pi(n), all primes plus the largest
// composites (and 1) as padding.
IntegerSet build_prime_tail_set(std::uint64_t n, std::uint64_t k, const PrimeTable& t);

struct ExtremalBounds {
    double max_lower_bound;  // c n^theta log n
    double min_upper_bound;  // (log n)^{2 + theta/(1-theta)}
};

// Reference envelopes with the o(1) terms dropped; diagnostic curves only.
ExtremalBounds extremal_bounds(std::uint64_t n, double theta, double c);

// x * u^{-u} with u = log x / log y; the elementary smooth-count predictor.
double cep_prediction(double x, double y);

}  // namespace psilcm

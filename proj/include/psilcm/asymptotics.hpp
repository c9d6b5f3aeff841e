#pragma once

#include <cstdint>

#include "psilcm/sieve.hpp"

namespace psilcm {

/// The (c, theta) parametrization coupling delta = c n^{theta-1} and
/// k = round(c n^theta).
struct RegimeParams {
    std::uint64_t n;
    double theta;  // in (0, 1]
    double c;      // positive; c < n^{1-theta} so that delta < 1

    double delta() const;
    std::uint64_t k() const;
    void validate() const;
};

// Main-term predictor for the mean of psi:
//   theta < 1: c(1-theta) n^theta log n - c log(c) n^theta
//   theta = 1: c log(1/c)/(1-c) n
// Branch selected strictly by theta == 1; the parametrizations do not join.
double predict_mean(const RegimeParams& r);

// n * delta log(1/delta) / (1 - delta), the exact main factor of the
// Bernoulli expectation.
double bernoulli_main_term(std::uint64_t n, double delta);

// epsilon(x) = psi(x)/x - 1, the relative Prime Number Theorem error.
double epsilon_error(std::uint64_t x, const PrimeTable& t);

// e^{-C sqrt(log(n delta))}; diagnostic envelope with user-supplied C.
double error_envelope(std::uint64_t n, double delta, double C);

}  // namespace psilcm

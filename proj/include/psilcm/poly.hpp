#pragma once

#include <cstdint>
#include <vector>

#include "psilcm/integer_set.hpp"
#include "psilcm/sieve.hpp"

namespace psilcm {

/// Integer polynomial a_0 + a_1 x + ... + a_d x^d with a_d > 0, d >= 1.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t leading() const { return coeffs_.back(); }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    // f(x), exact in 128-bit intermediate arithmetic.
    __int128 eval(std::int64_t x) const;

private:
    std::vector<std::int64_t> coeffs_;  // a_0 .. a_d
};

// Whether a degree-2 polynomial has no rational root (discriminant not a
// perfect square).
bool quadratic_is_irreducible(const IntPolynomial& f);

// A_f(n): distinct values f(k) in [1, n] over all integer k.
IntegerSet poly_set(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t);

// psi_f(n) = psi(A_f(n)); values factored by trial division with table
// primes (n <= limit^2).
double psi_poly(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t);

// Main term for linear f = a_1 x + a_0:
// (n/a_1) (q/phi(q)) sum_{l<=q, (l,q)=1} 1/l, with q = a_1/(a_1,a_0).
double predict_linear(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t);

// (1/2) sqrt(n/a_2) log(n/a_2) + B sqrt(n/a_2) for irreducible quadratics.
double predict_quadratic_irreducible(const IntPolynomial& f, std::uint64_t n, double B);

// sqrt(n); the x^2 - 1 instance of the reducible-quadratic asymptotic.
double predict_reducible_x2m1(std::uint64_t n);

// Conjectural main term (1 - 1/d) (n/a_d)^{1/d} log(n/a_d) for d >= 2.
double predict_conjecture(const IntPolynomial& f, std::uint64_t n);

/// Truncated series for the x^2+1 secondary constant B, plus the increment
/// contributed by the last dyadic block (P/2, P] as an oscillation
/// indicator. No convergence-rate claim.
struct BEstimate {
    double value;
    double last_block_delta;
    std::uint64_t prime_cap;
};

BEstimate estimate_B_constant(std::uint64_t prime_cap);

// Legendre symbol (-1/p) for an odd prime p: +1 iff p = 1 (mod 4).
int legendre_minus_one(std::uint64_t p);

}  // namespace psilcm

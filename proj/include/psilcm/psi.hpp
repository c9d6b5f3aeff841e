#pragma once

#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "psilcm/integer_set.hpp"
#include "psilcm/sieve.hpp"

namespace psilcm {

/// lcm of a set held as prime -> max exponent; log value summed without
/// ever forming the big integer.
struct FactoredLcm {
    std::map<std::uint64_t, std::uint32_t> exponents;

    double log_value() const;
    void absorb(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors);
};

FactoredLcm factored_lcm(const IntegerSet& A, const PrimeTable& t);

// psi(A) = log lcm(A), via factored exponent maxima. 0 for the empty set.
double psi_of_set(const IntegerSet& A, const PrimeTable& t);

// Same value via sum_m Lambda(m) * [A has a multiple of m], m over prime
// powers <= A.n(). Independent route used for cross-checks.
double psi_indicator(const IntegerSet& A, const PrimeTable& t);

// Exact big-integer lcm; test oracle for small inputs. 1 for the empty set.
// Throws resource_limit_error past digit_cap decimal digits.
boost::multiprecision::cpp_int lcm_exact(const IntegerSet& A, std::size_t digit_cap = 10'000);

}  // namespace psilcm

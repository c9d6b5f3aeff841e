#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "psilcm/sieve.hpp"

using namespace psilcm;

namespace {

// Independent primality check by trial division.
bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

const PrimeTable& table_1e6() {
    static PrimeTable t = build_prime_table(1'000'000);
    return t;
}

}  // namespace

TEST_CASE("small prime lists") {
    PrimeTable t = build_prime_table(10);
    CHECK(t.primes() == std::vector<std::uint32_t>{2, 3, 5, 7});
    PrimeTable t2 = build_prime_table(2);
    CHECK(t2.primes() == std::vector<std::uint32_t>{2});
}

TEST_CASE("limit out of range") {
    CHECK_THROWS_AS(build_prime_table(1), resource_limit_error);
    CHECK_THROWS_AS(build_prime_table(1'000'000'000), resource_limit_error);
}

TEST_CASE("prime list matches trial division up to 1e4") {
    PrimeTable t = build_prime_table(10'000);
    std::size_t idx = 0;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        if (trial_prime(n)) {
            REQUIRE(idx < t.primes().size());
            CHECK(t.primes()[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == t.primes().size());
    CHECK(t.prime_count(10'000) == 1229);
}

TEST_CASE("prime counts at powers of ten") {
    CHECK(table_1e6().prime_count(100'000) == 9592);
    CHECK(table_1e6().prime_count(1'000'000) == 78498);
}

TEST_CASE("von Mangoldt values") {
    const auto& t = table_1e6();
    CHECK(t.von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(t.von_mangoldt(6) == 0.0);
    CHECK(t.von_mangoldt(1) == 0.0);
    CHECK(t.von_mangoldt(9973) == doctest::Approx(std::log(9973.0)).epsilon(1e-12));
    CHECK_THROWS_AS(t.von_mangoldt(2'000'000), out_of_table_error);
}

TEST_CASE("psi prefix invariants") {
    PrimeTable t = build_prime_table(10'000);
    CHECK(t.chebyshev_psi(1) == 0.0);
    double prev = 0.0;
    for (std::uint64_t x = 1; x <= 10'000; ++x) {
        const double v = t.chebyshev_psi(x);
        CHECK(v >= prev);
        prev = v;
    }
    // jumps of log p at prime powers
    for (std::uint32_t p : t.primes()) {
        for (std::uint64_t q = p; q <= 10'000; q *= p) {
            CHECK(t.chebyshev_psi(q) - t.chebyshev_psi(q - 1) ==
                  doctest::Approx(std::log(static_cast<double>(p))).epsilon(1e-12));
            if (q > 10'000 / p) break;
        }
    }
}

TEST_CASE("psi against brute-force prime power sum up to 1e4") {
    PrimeTable t = build_prime_table(10'000);
    double brute = 0.0;
    for (std::uint64_t x = 2; x <= 10'000; ++x) {
        if (trial_prime(x)) {
            brute += std::log(static_cast<double>(x));
        } else {
            // power of the smallest prime factor?
            std::uint64_t p = 2;
            while (x % p != 0) ++p;
            std::uint64_t q = x;
            while (q % p == 0) q /= p;
            if (q == 1) brute += std::log(static_cast<double>(p));
        }
        CHECK(std::abs(t.chebyshev_psi(x) - brute) <= 1e-9);
    }
}

TEST_CASE("psi(10) equals log lcm(1..10)") {
    CHECK(table_1e6().chebyshev_psi(10) == doctest::Approx(std::log(2520.0)).epsilon(1e-12));
}

TEST_CASE("psi(1e6) PNT band") {
    const double v = table_1e6().chebyshev_psi(1'000'000);
    CHECK(std::abs(v / 1e6 - 1.0) < 0.01);
}

TEST_CASE("psi above the stored prefix matches a direct rebuild") {
    // force the segmented-tail path with a tiny stored prefix surrogate:
    // compare against an independently accumulated sum on a fresh table
    PrimeTable t = build_prime_table(20'000);
    double acc = 0.0;
    for (std::uint64_t m = 2; m <= 20'000; ++m) acc += t.von_mangoldt(m);
    CHECK(t.chebyshev_psi(20'000) == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("factorize basics") {
    const auto& t = table_1e6();
    CHECK(t.factorize(12) ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 1}});
    CHECK(t.factorize(1).empty());
    // 9973 is prime; its square is beyond the table but within limit^2
    CHECK(t.factorize(99'460'729) ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{9973, 2}});
    CHECK_THROWS_AS(t.factorize(0), std::invalid_argument);
}

TEST_CASE("factorize out of range") {
    PrimeTable t = build_prime_table(100);
    CHECK_THROWS_AS(t.factorize(10'001), out_of_table_error);
}

TEST_CASE("factorize reconstruction property") {
    const auto& t = table_1e6();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, t.limit());
    for (int i = 0; i < 100'000; ++i) {
        const std::uint64_t a = dist(rng);
        std::uint64_t prod = 1;
        std::uint64_t prev_prime = 0;
        for (const auto& [p, e] : t.factorize(a)) {
            CHECK(p > prev_prime);
            CHECK(e >= 1);
            prev_prime = p;
            for (std::uint32_t j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == a);
    }
}

TEST_CASE("euler phi examples") {
    const auto& t = table_1e6();
    CHECK(t.euler_phi(1) == 1);
    CHECK(t.euler_phi(12) == 4);
    CHECK(t.euler_phi(9973) == 9972);
    CHECK(trial_prime(9973));
}

TEST_CASE("euler phi against gcd counting") {
    const auto& t = table_1e6();
    for (std::uint64_t q = 1; q <= 500; ++q) {
        std::uint64_t count = 0;
        for (std::uint64_t l = 1; l <= q; ++l) {
            if (std::gcd(l, q) == 1) ++count;
        }
        CHECK(t.euler_phi(q) == count);
    }
}

TEST_CASE("euler phi against independent sieve up to 1e4") {
    const auto& t = table_1e6();
    std::vector<std::uint64_t> phi(10'001);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint64_t p = 2; p <= 10'000; ++p) {
        if (phi[p] == p) {  // untouched => prime
            for (std::uint64_t m = p; m <= 10'000; m += p) phi[m] -= phi[m] / p;
        }
    }
    for (std::uint64_t q = 1; q <= 10'000; ++q) CHECK(t.euler_phi(q) == phi[q]);
}

TEST_CASE("segmented prime enumeration agrees with the table") {
    const auto& t = table_1e6();
    std::vector<std::uint64_t> got;
    for_each_prime(500'000, 510'000, [&](std::uint64_t p) { got.push_back(p); });
    std::vector<std::uint64_t> want;
    for (std::uint32_t p : t.primes()) {
        if (p >= 500'000 && p <= 510'000) want.push_back(p);
    }
    CHECK(got == want);
}

TEST_CASE("prime powers list") {
    const auto& t = table_1e6();
    auto pps = prime_powers_up_to(10, t);
    std::vector<std::uint64_t> values;
    for (const auto& pp : pps) values.push_back(pp.value);
    CHECK(values == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
}

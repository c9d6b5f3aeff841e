#include <doctest.h>

#include <cmath>
#include <map>

#include "psilcm/random_models.hpp"

using namespace psilcm;

namespace {

const PrimeTable& table() {
    static PrimeTable t = build_prime_table(100'000);
    return t;
}

std::uint32_t set_mask(const IntegerSet& A) {
    std::uint32_t m = 0;
    for (std::uint64_t a : A.elements()) m |= 1u << (a - 1);
    return m;
}

}  // namespace

TEST_CASE("model validation") {
    CHECK_THROWS_AS(validate(BernoulliModel{10, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(BernoulliModel{10, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(UniformKModel{10, 11}), std::invalid_argument);
    CHECK_NOTHROW(validate(BernoulliModel{10, 0.5}));
    CHECK_NOTHROW(validate(UniformKModel{10, 0}));
}

TEST_CASE("samplers are deterministic per (seed, trial)") {
    const BernoulliModel b{1000, 0.3};
    CHECK(sample_bernoulli(b, 5, 17).elements() == sample_bernoulli(b, 5, 17).elements());
    CHECK(sample_bernoulli(b, 5, 17).elements() != sample_bernoulli(b, 5, 18).elements());
    const UniformKModel u{1000, 30};
    CHECK(sample_uniform_k(u, 5, 17).elements() == sample_uniform_k(u, 5, 17).elements());
    CHECK(sample_uniform_k(u, 6, 17).elements() != sample_uniform_k(u, 5, 17).elements());
}

TEST_CASE("tiny delta gives mostly empty sets") {
    const BernoulliModel m{10, 1e-9};
    int empty = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        if (sample_bernoulli(m, 1, i).empty()) ++empty;
    }
    CHECK(empty >= 990);
}

TEST_CASE("bernoulli mean size near n*delta") {
    const BernoulliModel m{10'000, 0.1};
    double total = 0;
    for (std::uint64_t i = 0; i < 500; ++i) total += sample_bernoulli(m, 2, i).size();
    const double mean = total / 500.0;
    // 4 sigma of the mean of 500 Binomial(n, delta) draws
    CHECK(std::abs(mean - 1000.0) <= 4.0 * std::sqrt(10'000 * 0.1 * 0.9 / 500.0));
}

TEST_CASE("uniform-k edge sizes") {
    CHECK(sample_uniform_k(UniformKModel{9, 0}, 0, 0).empty());
    auto full = sample_uniform_k(UniformKModel{9, 9}, 0, 0);
    CHECK(full.elements() == IntegerSet::full(9).elements());
    for (std::uint64_t i = 0; i < 100; ++i) {
        CHECK(sample_uniform_k(UniformKModel{50, 7}, 3, i).size() == 7);
    }
}

TEST_CASE("uniform-k subsets equidistributed at n=6,k=2") {
    const UniformKModel m{6, 2};
    std::map<std::uint32_t, int> counts;
    const int trials = 60'000;
    for (int i = 0; i < trials; ++i) counts[set_mask(sample_uniform_k(m, 9, i))]++;
    CHECK(counts.size() == 15);
    const double expect = trials / 15.0;
    const double sigma = std::sqrt(trials * (1.0 / 15.0) * (14.0 / 15.0));
    for (const auto& [mask, c] : counts) {
        CHECK(std::abs(c - expect) <= 5.0 * sigma);
    }
}

TEST_CASE("bernoulli subsets match product measure at n=4") {
    const double delta = 0.3;
    const BernoulliModel m{4, delta};
    std::map<std::uint32_t, int> counts;
    const int trials = 100'000;
    for (int i = 0; i < trials; ++i) counts[set_mask(sample_bernoulli(m, 11, i))]++;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        const int size = __builtin_popcount(mask);
        const double p = std::pow(delta, size) * std::pow(1 - delta, 4 - size);
        const double sigma = std::sqrt(trials * p * (1 - p));
        CHECK(std::abs(counts[mask] - trials * p) <= 5.0 * sigma);
    }
}

TEST_CASE("montecarlo bernoulli n=2 matches the 4-subset enumeration") {
    // exact: mean log2/2, variance log^2(2)/4
    const auto s = montecarlo_psi(BernoulliModel{2, 0.5}, 100'000, 123, table());
    const double mean = std::log(2.0) / 2.0;
    const double var = std::log(2.0) * std::log(2.0) / 4.0;
    CHECK(std::abs(s.mean_psi - mean) <= 4.0 * std::sqrt(var / 100'000.0));
    CHECK(s.var_psi == doctest::Approx(var).epsilon(0.05));
    CHECK(std::abs(s.mean_size - 1.0) <= 4.0 * std::sqrt(0.5 / 100'000.0));
}

TEST_CASE("montecarlo uniform n=4 k=2") {
    const auto s = montecarlo_psi(UniformKModel{4, 2}, 100'000, 321, table());
    const double mean = std::log(6912.0) / 6.0;
    const double second = 2.4860315233;
    const double var = second - mean * mean;
    CHECK(std::abs(s.mean_psi - mean) <= 4.0 * std::sqrt(var / 100'000.0));
    CHECK(s.mean_size == 2.0);
}

TEST_CASE("single trial is degenerate") {
    const auto s = montecarlo_psi(BernoulliModel{100, 0.5}, 1, 0, table());
    CHECK(s.trials == 1);
    CHECK(s.var_psi == 0.0);
    CHECK(s.degenerate);
    CHECK(s.quantiles.size() == 3);
    CHECK(s.quantiles[0].second == s.quantiles[2].second);
}

TEST_CASE("montecarlo rejects an oversized model") {
    PrimeTable small = build_prime_table(100);
    CHECK_THROWS_AS(montecarlo_psi(BernoulliModel{1000, 0.5}, 10, 0, small),
                    resource_limit_error);
}

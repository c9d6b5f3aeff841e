#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "psilcm/extremal.hpp"
#include "psilcm/psi.hpp"

using namespace psilcm;

namespace {

const PrimeTable& table() {
    static PrimeTable t = build_prime_table(1'000'000);
    return t;
}

bool is_y_smooth(std::uint64_t x, std::uint64_t y, const PrimeTable& t) {
    for (const auto& [p, e] : t.factorize(x)) {
        if (p > y) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smooth_count small values") {
    const auto& t = table();
    // 2-smooth numbers <= 100: 1, 2, 4, ..., 64
    CHECK(smooth_count(100, 2, t) == 7);
    CHECK(smooth_count(100, 5, t) == 34);
    CHECK(smooth_count(100, 100, t) == 100);
    CHECK(smooth_count(100, 1, t) == 1);
    CHECK(smooth_count(1, 2, t) == 1);
}

TEST_CASE("smooth_count against direct factorization scan") {
    const auto& t = table();
    for (std::uint64_t y : {2ull, 3ull, 7ull, 13ull, 50ull}) {
        std::uint64_t direct = 0;
        for (std::uint64_t x = 1; x <= 3000; ++x) {
            if (is_y_smooth(x, y, t)) ++direct;
        }
        CHECK(smooth_count(3000, y, t) == direct);
    }
}

TEST_CASE("build_smooth_set picks the minimal smoothness bound") {
    const auto& t = table();
    auto [A, spec] = build_smooth_set(100, 34, t);
    CHECK(spec.y == 5);
    CHECK(A.size() == 34);
    for (std::uint64_t a : A.elements()) CHECK(is_y_smooth(a, 5, t));

    // asking for 35 elements forces y = 7
    auto [B, spec7] = build_smooth_set(100, 35, t);
    CHECK(spec7.y == 7);
    CHECK(B.size() == 35);

    auto [one, spec1] = build_smooth_set(100, 1, t);
    CHECK(spec1.y == 1);
    CHECK(one.elements() == std::vector<std::uint64_t>{1});
}

TEST_CASE("smooth set takes the k smallest smooth numbers") {
    const auto& t = table();
    auto [A, spec] = build_smooth_set(100, 10, t);
    std::vector<std::uint64_t> all;
    for (std::uint64_t x = 1; x <= 100; ++x) {
        if (is_y_smooth(x, spec.y, t)) all.push_back(x);
    }
    all.resize(10);
    CHECK(A.elements() == all);
    CHECK(spec.t_effective ==
          doctest::Approx(std::log(static_cast<double>(spec.y)) /
                          std::log(std::log(100.0))).epsilon(1e-12));
}

TEST_CASE("smooth closed form equals psi of the full smooth set") {
    const auto& t = table();
    CHECK(psi_smooth_closed_form(100, 5, t) ==
          doctest::Approx(std::log(129'600.0)).epsilon(1e-12));
    for (std::uint64_t y : {2ull, 5ull, 13ull, 97ull}) {
        std::vector<std::uint64_t> elems;
        for (std::uint64_t x = 1; x <= 500; ++x) {
            if (is_y_smooth(x, y, t)) elems.push_back(x);
        }
        IntegerSet A(500, std::move(elems));
        CHECK(psi_smooth_closed_form(500, y, t) ==
              doctest::Approx(psi_of_set(A, t)).epsilon(1e-10));
    }
}

TEST_CASE("prime tail set small cases") {
    const auto& t = table();
    CHECK(build_prime_tail_set(10, 2, t).elements() == std::vector<std::uint64_t>{5, 7});
    CHECK(build_prime_tail_set(10, 4, t).elements() ==
          std::vector<std::uint64_t>{2, 3, 5, 7});
    // k beyond pi(10) = 4: pad with the largest non-primes
    CHECK(build_prime_tail_set(10, 6, t).elements() ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 9, 10});
    CHECK(build_prime_tail_set(10, 10, t).elements() == IntegerSet::full(10).elements());
}

TEST_CASE("prime tail psi is the sum of the tail logs") {
    const auto& t = table();
    IntegerSet A = build_prime_tail_set(1000, 50, t);
    double want = 0.0;
    for (std::uint64_t a : A.elements()) want += std::log(static_cast<double>(a));
    CHECK(psi_of_set(A, t) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("extremal bounds reference curves") {
    const auto b = extremal_bounds(1'000'000, 0.5, 1.0);
    const double L = std::log(1e6);
    CHECK(b.max_lower_bound == doctest::Approx(1000.0 * L).epsilon(1e-12));
    CHECK(b.min_upper_bound == doctest::Approx(L * L * L).epsilon(1e-12));
}

TEST_CASE("cep prediction tracks the smooth count") {
    const auto& t = table();
    // u = 2: predict x / 4
    CHECK(cep_prediction(10'000.0, 100.0) == doctest::Approx(2500.0).epsilon(1e-12));
    // crude accuracy check in a moderate range
    const double pred = cep_prediction(100'000.0, std::pow(100'000.0, 1.0 / 3.0));
    const double actual =
        static_cast<double>(smooth_count(100'000, static_cast<std::uint64_t>(
                                                       std::pow(100'000.0, 1.0 / 3.0)),
                                         t));
    CHECK(pred / actual > 0.1);
    CHECK(pred / actual < 10.0);
}

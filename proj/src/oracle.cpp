#include "psilcm/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace psilcm {
namespace oracle {
namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::uint64_t> mask_to_set(std::uint32_t mask, std::uint64_t n) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) v.push_back(i + 1);
    }
    return v;
}

}  // namespace

std::vector<double> psi_over_subsets(std::uint64_t n, const PrimeTable& t) {
    if (n > 20) throw resource_limit_error("psi_over_subsets: n must be <= 20");
    // Factorizations of 1..n over the primes <= n, memoized up front.
    std::vector<std::uint64_t> primes;
    for (std::uint32_t p : t.primes()) {
        if (p > n) break;
        primes.push_back(p);
    }
    std::vector<double> log_p(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
        log_p[i] = std::log(static_cast<double>(primes[i]));
    std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> fac(n + 1);
    for (std::uint64_t a = 2; a <= n; ++a) {
        for (const auto& [p, e] : t.factorize(a)) {
            auto idx = static_cast<std::uint8_t>(
                std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
            fac[a].emplace_back(idx, static_cast<std::uint8_t>(e));
        }
    }
    std::vector<double> psis(std::size_t{1} << n, 0.0);
    std::array<std::uint8_t, 20> maxexp{};
    for (std::uint32_t mask = 1; mask < psis.size(); ++mask) {
        maxexp.fill(0);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            for (const auto& [idx, e] : fac[i + 1]) {
                maxexp[idx] = std::max(maxexp[idx], e);
            }
        }
        double s = 0.0;
        for (std::size_t i = 0; i < primes.size(); ++i) s += maxexp[i] * log_p[i];
        psis[mask] = s;
    }
    return psis;
}

std::pair<double, double> enumerate_bernoulli_moments(std::uint64_t n, double delta,
                                                      const PrimeTable& t) {
    if (n > 20) throw resource_limit_error("enumerate_bernoulli_moments: n must be <= 20");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("enumerate_bernoulli_moments: delta outside (0,1)");
    const auto psis = psi_over_subsets(n, t);
    // delta^j (1-delta)^{n-j} by subset size.
    std::vector<long double> weight(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) {
        weight[j] = std::pow(static_cast<long double>(delta), static_cast<long double>(j)) *
                    std::pow(static_cast<long double>(1.0 - delta),
                             static_cast<long double>(n - j));
    }
    long double e1 = 0.0L, e2 = 0.0L;
    for (std::uint32_t mask = 0; mask < psis.size(); ++mask) {
        const long double w = weight[std::popcount(mask)];
        e1 += w * psis[mask];
        e2 += w * psis[mask] * psis[mask];
    }
    const auto mean = static_cast<double>(e1);
    return {mean, static_cast<double>(e2) - mean * mean};
}

std::pair<double, double> enumerate_uniform_k_moments(std::uint64_t n, std::uint64_t k,
                                                      const PrimeTable& t) {
    if (k > n) throw std::invalid_argument("enumerate_uniform_k_moments: k > n");
    if (n > 20 || binom(n, k) > 1'000'000)
        throw resource_limit_error("enumerate_uniform_k_moments: C(n,k) cap exceeded");
    const auto psis = psi_over_subsets(n, t);
    long double s1 = 0.0L, s2 = 0.0L;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < psis.size(); ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
        s1 += psis[mask];
        s2 += psis[mask] * psis[mask];
        ++count;
    }
    return {static_cast<double>(s1 / count), static_cast<double>(s2 / count)};
}

std::vector<std::vector<double>> uniform_k_moment_table(std::uint64_t n, const PrimeTable& t) {
    if (n > 20) throw resource_limit_error("uniform_k_moment_table: n must be <= 20");
    const auto psis = psi_over_subsets(n, t);
    std::vector<std::vector<long double>> sums(2, std::vector<long double>(n + 1, 0.0L));
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint32_t mask = 0; mask < psis.size(); ++mask) {
        const auto k = static_cast<std::uint64_t>(std::popcount(mask));
        sums[0][k] += psis[mask];
        sums[1][k] += psis[mask] * psis[mask];
        ++counts[k];
    }
    std::vector<std::vector<double>> out(2, std::vector<double>(n + 1));
    for (int s = 0; s < 2; ++s) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            out[s][k] = static_cast<double>(sums[s][k] / counts[k]);
        }
    }
    return out;
}

ExtremalResult extremal_psi_exhaustive(std::uint64_t n, std::uint64_t k, const PrimeTable& t) {
    if (k > n) throw std::invalid_argument("extremal_psi_exhaustive: k > n");
    if (n > 20 || binom(n, k) > 1'000'000)
        throw resource_limit_error("extremal_psi_exhaustive: C(n,k) cap exceeded");
    const auto psis = psi_over_subsets(n, t);
    ExtremalResult r{0.0, {}, 0.0, {}};
    bool first = true;
    for (std::uint32_t mask = 0; mask < psis.size(); ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
        const double v = psis[mask];
        auto set = mask_to_set(mask, n);
        if (first) {
            r = {v, set, v, set};
            first = false;
            continue;
        }
        if (v < r.min_psi ||
            (v == r.min_psi && std::lexicographical_compare(set.begin(), set.end(),
                                                            r.argmin.begin(), r.argmin.end()))) {
            r.min_psi = v;
            r.argmin = set;
        }
        if (v > r.max_psi ||
            (v == r.max_psi && std::lexicographical_compare(set.begin(), set.end(),
                                                            r.argmax.begin(), r.argmax.end()))) {
            r.max_psi = v;
            r.argmax = set;
        }
    }
    return r;
}

}  // namespace oracle
}  // namespace psilcm

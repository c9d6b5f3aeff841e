#include "psilcm/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "psilcm/psi.hpp"

namespace psilcm {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial_index + 1)));
}

}  // namespace

void validate(const BernoulliModel& m) {
    if (m.n < 1) throw std::invalid_argument("BernoulliModel: n must be >= 1");
    if (!(m.delta > 0.0 && m.delta < 1.0))
        throw std::invalid_argument("BernoulliModel: delta must lie in (0,1)");
}

void validate(const UniformKModel& m) {
    if (m.n < 1) throw std::invalid_argument("UniformKModel: n must be >= 1");
    if (m.k > m.n) throw std::invalid_argument("UniformKModel: k must lie in [0,n]");
}

IntegerSet sample_bernoulli(const BernoulliModel& m, std::uint64_t seed,
                            std::uint64_t trial_index) {
    validate(m);
    auto rng = trial_rng(seed, trial_index);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::uint64_t> elems;
    // Geometric gap skipping: expected O(delta*n) work instead of n coin flips.
    const double log_q = std::log1p(-m.delta);
    std::uint64_t pos = 0;
    while (true) {
        double u = unif(rng);
        // skip ~ Geometric(delta): number of misses before the next hit
        double skip = std::floor(std::log1p(-u) / log_q);
        if (skip >= static_cast<double>(m.n)) break;  // past the end for sure
        pos += static_cast<std::uint64_t>(skip) + 1;
        if (pos > m.n) break;
        elems.push_back(pos);
    }
    return IntegerSet(m.n, std::move(elems));
}

IntegerSet sample_uniform_k(const UniformKModel& m, std::uint64_t seed,
                            std::uint64_t trial_index) {
    validate(m);
    auto rng = trial_rng(seed, trial_index);
    // Partial Fisher-Yates over a sparse view of 1..n: O(k) memory.
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    moved.reserve(2 * m.k);
    std::vector<std::uint64_t> elems;
    elems.reserve(m.k);
    for (std::uint64_t i = 0; i < m.k; ++i) {
        std::uniform_int_distribution<std::uint64_t> dist(i, m.n - 1);
        std::uint64_t j = dist(rng);
        auto at = [&](std::uint64_t idx) {
            auto it = moved.find(idx);
            return it == moved.end() ? idx + 1 : it->second;
        };
        std::uint64_t picked = at(j);
        moved[j] = at(i);
        elems.push_back(picked);
    }
    return IntegerSet(m.n, std::move(elems));
}

std::vector<double> montecarlo_psis(const RandomModel& m, std::uint64_t trials,
                                    std::uint64_t seed, const PrimeTable& t) {
    if (trials < 1) throw std::invalid_argument("montecarlo_psis: trials must be >= 1");
    std::vector<double> psis(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        IntegerSet A = std::holds_alternative<BernoulliModel>(m)
                           ? sample_bernoulli(std::get<BernoulliModel>(m), seed, i)
                           : sample_uniform_k(std::get<UniformKModel>(m), seed, i);
        psis[i] = psi_of_set(A, t);
    }
    return psis;
}

SampleStats montecarlo_psi(const RandomModel& m, std::uint64_t trials, std::uint64_t seed,
                           const PrimeTable& t, const std::vector<double>& quantile_levels) {
    std::uint64_t n = std::visit([](const auto& model) { return model.n; }, m);
    if (n > t.limit()) throw resource_limit_error("montecarlo_psi: model n exceeds table limit");

    std::vector<double> psis(trials);
    std::vector<double> sizes(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        IntegerSet A = std::holds_alternative<BernoulliModel>(m)
                           ? sample_bernoulli(std::get<BernoulliModel>(m), seed, i)
                           : sample_uniform_k(std::get<UniformKModel>(m), seed, i);
        psis[i] = psi_of_set(A, t);
        sizes[i] = static_cast<double>(A.size());
    }

    SampleStats s;
    s.trials = trials;
    double sum = 0.0, size_sum = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) { sum += psis[i]; size_sum += sizes[i]; }
    s.mean_psi = sum / static_cast<double>(trials);
    s.mean_size = size_sum / static_cast<double>(trials);
    if (trials == 1) {
        s.var_psi = 0.0;
        s.degenerate = true;
    } else {
        double ss = 0.0;
        for (double v : psis) ss += (v - s.mean_psi) * (v - s.mean_psi);
        s.var_psi = ss / static_cast<double>(trials - 1);
    }
    std::vector<double> sorted = psis;
    std::sort(sorted.begin(), sorted.end());
    for (double level : quantile_levels) {
        if (!(level > 0.0 && level < 1.0))
            throw std::invalid_argument("montecarlo_psi: quantile level outside (0,1)");
        double idx = level * static_cast<double>(trials - 1);
        auto lo = static_cast<std::size_t>(idx);
        auto hi = std::min<std::size_t>(lo + 1, trials - 1);
        double frac = idx - static_cast<double>(lo);
        s.quantiles.emplace_back(level, sorted[lo] * (1.0 - frac) + sorted[hi] * frac);
    }
    return s;
}

}  // namespace psilcm

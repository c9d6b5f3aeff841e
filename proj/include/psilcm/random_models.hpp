#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "psilcm/integer_set.hpp"
#include "psilcm/sieve.hpp"

namespace psilcm {

/// S(n; delta): each of 1..n included independently with probability delta.
struct BernoulliModel {
    std::uint64_t n;
    double delta;
};

/// Uniform measure on the size-k subsets of {1,...,n}.
struct UniformKModel {
    std::uint64_t n;
    std::uint64_t k;
};

using RandomModel = std::variant<BernoulliModel, UniformKModel>;

void validate(const BernoulliModel& m);
void validate(const UniformKModel& m);

struct SampleStats {
    std::uint64_t trials = 0;
    double mean_psi = 0.0;
    double var_psi = 0.0;  // unbiased; 0 with degenerate flag when trials == 1
    double mean_size = 0.0;
    std::vector<std::pair<double, double>> quantiles;  // (level, value)
    bool degenerate = false;
};

// Both samplers are deterministic functions of (seed, trial_index): the
// per-trial stream is derived by mixing the pair, so results do not depend
// on how trials are scheduled.
IntegerSet sample_bernoulli(const BernoulliModel& m, std::uint64_t seed,
                            std::uint64_t trial_index);
IntegerSet sample_uniform_k(const UniformKModel& m, std::uint64_t seed,
                            std::uint64_t trial_index);

SampleStats montecarlo_psi(const RandomModel& m, std::uint64_t trials, std::uint64_t seed,
                           const PrimeTable& t,
                           const std::vector<double>& quantile_levels = {0.05, 0.5, 0.95});

// Per-trial psi values in trial order (what montecarlo_psi reduces).
std::vector<double> montecarlo_psis(const RandomModel& m, std::uint64_t trials,
                                    std::uint64_t seed, const PrimeTable& t);

}  // namespace psilcm

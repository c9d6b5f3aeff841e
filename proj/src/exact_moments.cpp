#include "psilcm/exact_moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace psilcm {
namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
}

// (1-delta)^q without cancellation for small delta.
double pow_q(double delta, double q) {
    return q <= 0.0 ? 1.0 : std::exp(q * std::log1p(-delta));
}

// Prefix logs of the miss-ratio R(q) = C(n-q,k)/C(n,k):
// log R(q) = sum_{i=0}^{q-1} [log(n-k-i) - log(n-i)], valid for q <= n-k.
std::vector<double> miss_ratio_log_prefix(std::uint64_t n, std::uint64_t k) {
    const std::uint64_t qmax = n - k;
    std::vector<double> pre(qmax + 1, 0.0);
    long double acc = 0.0L;
    for (std::uint64_t i = 0; i < qmax; ++i) {
        acc += std::log(static_cast<long double>(n - k - i)) -
               std::log(static_cast<long double>(n - i));
        pre[i + 1] = static_cast<double>(acc);
    }
    return pre;
}

}  // namespace

void MomentReport::derive_variance() {
    if (!second_moment) return;
    double v = *second_moment - expectation * expectation;
    if (v < 0.0) {
        if (v < -1e-9) throw std::logic_error("MomentReport: variance below -1e-9");
        v = 0.0;
        variance_clamped = true;
    }
    variance = v;
}

double expectation_bernoulli_direct(std::uint64_t n, double delta, const PrimeTable& t) {
    check_delta(delta);
    if (n > t.limit()) throw out_of_table_error("expectation_bernoulli_direct: n exceeds table");
    long double sum = 0.0L;
    for (const PrimePower& pp : prime_powers_up_to(n, t)) {
        const auto q = static_cast<double>(n / pp.value);
        sum += pp.log_p * (1.0 - pow_q(delta, q));
    }
    return static_cast<double>(sum);
}

double expectation_bernoulli_grouped(std::uint64_t n, double delta, const PrimeTable& t) {
    check_delta(delta);
    if (n > t.limit()) throw out_of_table_error("expectation_bernoulli_grouped: n exceeds table");
    const double psi_n = t.chebyshev_psi(n);
    const double log_q = std::log1p(-delta);
    long double sum = 0.0L;
    double weight = 1.0;  // (1-delta)^{r-1}
    for (std::uint64_t r = 1; r <= n; ++r) {
        if (weight * psi_n < 1e-12) break;
        sum += static_cast<long double>(t.chebyshev_psi(n / r)) * weight;
        weight = std::exp(static_cast<double>(r) * log_q);
    }
    return static_cast<double>(delta * sum);
}

double pair_indicator_expectation(std::uint64_t m, std::uint64_t l, std::uint64_t n,
                                  double delta) {
    check_delta(delta);
    const std::uint64_t qm = n / m;
    const std::uint64_t ql = n / l;
    const std::uint64_t g = std::gcd(m, l);
    const std::uint64_t lcm = m / g * l;
    const std::uint64_t qg = n / lcm;  // floor(n*(m,l)/(ml))
    const auto d = [&](std::uint64_t q) { return pow_q(delta, static_cast<double>(q)); };
    return 1.0 - d(qm) - d(ql) + d(qm + ql - qg);
}

double variance_bernoulli_exact(std::uint64_t n, double delta, const PrimeTable& t,
                                std::uint64_t pairwise_cap) {
    check_delta(delta);
    if (n > pairwise_cap) {
        throw resource_limit_error(
            "variance_bernoulli_exact: n exceeds the pairwise cap " +
            std::to_string(pairwise_cap) +
            " (override the cap, or use Monte Carlo for larger n)");
    }
    if (n > t.limit()) throw out_of_table_error("variance_bernoulli_exact: n exceeds table");
    const auto pps = prime_powers_up_to(n, t);
    const auto d = [&](std::uint64_t q) { return pow_q(delta, static_cast<double>(q)); };
    // Cov(I_m, I_l) = (1-d)^{qm+ql-qg} (1 - (1-d)^{qg}); zero unless lcm(m,l) <= n.
    long double var = 0.0L;
    for (const PrimePower& pp : pps) {
        const std::uint64_t q = n / pp.value;
        var += static_cast<long double>(pp.log_p * pp.log_p) * d(q) * (1.0 - d(q));
    }
    for (std::size_t i = 0; i < pps.size(); ++i) {
        const std::uint64_t m = pps[i].value;
        const std::uint64_t qm = n / m;
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint64_t l = pps[j].value;
            std::uint64_t qg;
            if (pps[i].prime == pps[j].prime) {
                qg = qm;  // l | m, lcm = m
            } else {
                if (l > n / m) continue;  // coprime with lcm > n: zero covariance
                qg = n / (m * l);
            }
            const std::uint64_t ql = n / l;
            var += 2.0L * static_cast<long double>(pps[i].log_p * pps[j].log_p) *
                   d(qm + ql - qg) * (1.0 - d(qg));
        }
    }
    return static_cast<double>(var);
}

double expectation_uniform_k(std::uint64_t n, std::uint64_t k, const PrimeTable& t) {
    if (k > n) throw std::invalid_argument("expectation_uniform_k: k > n");
    if (n > t.limit()) throw out_of_table_error("expectation_uniform_k: n exceeds table");
    if (k == 0) return 0.0;
    const auto pre = miss_ratio_log_prefix(n, k);
    const std::uint64_t qmax = n - k;
    long double sum = 0.0L;
    for (const PrimePower& pp : prime_powers_up_to(n, t)) {
        const std::uint64_t q = n / pp.value;
        const double miss = q > qmax ? 0.0 : std::exp(pre[q]);
        sum += pp.log_p * (1.0 - miss);
    }
    return static_cast<double>(sum);
}

double second_moment_uniform_k(std::uint64_t n, std::uint64_t k, const PrimeTable& t,
                               std::uint64_t pairwise_cap) {
    if (k > n) throw std::invalid_argument("second_moment_uniform_k: k > n");
    if (n > pairwise_cap) {
        throw resource_limit_error("second_moment_uniform_k: n exceeds the pairwise cap " +
                                   std::to_string(pairwise_cap) + " (override the cap)");
    }
    if (n > t.limit()) throw out_of_table_error("second_moment_uniform_k: n exceeds table");
    if (k == 0) return 0.0;
    const auto pre = miss_ratio_log_prefix(n, k);
    const std::uint64_t qmax = n - k;
    const auto R = [&](std::uint64_t q) { return q > qmax ? 0.0 : std::exp(pre[q]); };
    const auto pps = prime_powers_up_to(n, t);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < pps.size(); ++i) {
        const std::uint64_t m = pps[i].value;
        const std::uint64_t qm = n / m;
        for (std::size_t j = 0; j <= i; ++j) {
            const std::uint64_t l = pps[j].value;
            const std::uint64_t ql = n / l;
            const std::uint64_t g = std::gcd(m, l);
            const std::uint64_t lcm = m / g * l;
            const std::uint64_t qg = lcm > n ? 0 : n / lcm;
            const double p_joint = 1.0 - R(qm) - R(ql) + R(qm + ql - qg);
            const double w = (i == j) ? 1.0 : 2.0;
            sum += w * pps[i].log_p * pps[j].log_p * p_joint;
        }
    }
    return static_cast<double>(sum);
}

double chernoff_bound(std::uint64_t k, double r) {
    if (k < 1 || !(r > 0.0)) throw std::invalid_argument("chernoff_bound: need k >= 1, r > 0");
    return 2.0 * std::exp(-r * r / (4.0 * static_cast<double>(k)));
}

double binomial_tail_exact(std::uint64_t n, double delta, double r, std::uint64_t exact_cap) {
    check_delta(delta);
    if (n > exact_cap) {
        throw resource_limit_error("binomial_tail_exact: n exceeds the exact cap " +
                                   std::to_string(exact_cap));
    }
    const double mean = static_cast<double>(n) * delta;
    const double lp = std::log(delta);
    const double lq = std::log1p(-delta);
    const double lg_n = std::lgamma(static_cast<double>(n) + 1.0);
    long double tail = 0.0L;
    for (std::uint64_t j = 0; j <= n; ++j) {
        const auto jd = static_cast<double>(j);
        if (std::abs(jd - mean) < r) continue;
        const double log_term = lg_n - std::lgamma(jd + 1.0) -
                                std::lgamma(static_cast<double>(n - j) + 1.0) + jd * lp +
                                static_cast<double>(n - j) * lq;
        tail += std::exp(static_cast<long double>(log_term));
    }
    return std::min<double>(1.0, static_cast<double>(tail));
}

TransferGap transfer_gap(std::uint64_t n, std::uint64_t k, const PrimeTable& t, int s) {
    if (s != 1 && s != 2) throw std::invalid_argument("transfer_gap: s must be 1 or 2");
    if (k > n) throw std::invalid_argument("transfer_gap: k > n");

    double bernoulli_side;
    double uniform_side;
    if (k == 0) {
        bernoulli_side = uniform_side = 0.0;
    } else if (k == n) {
        // delta = 1 degenerate endpoint: the only set is {1,...,n}.
        const double psi_n = t.chebyshev_psi(n);
        bernoulli_side = s == 1 ? psi_n : psi_n * psi_n;
        uniform_side = bernoulli_side;
    } else {
        const double delta = static_cast<double>(k) / static_cast<double>(n);
        if (s == 1) {
            bernoulli_side = expectation_bernoulli_direct(n, delta, t);
            uniform_side = expectation_uniform_k(n, k, t);
        } else {
            const double e = expectation_bernoulli_direct(n, delta, t);
            bernoulli_side = variance_bernoulli_exact(n, delta, t) + e * e;
            uniform_side = second_moment_uniform_k(n, k, t);
        }
    }
    const double log_n = std::log(static_cast<double>(n));
    TransferGap g;
    g.gap = std::abs(bernoulli_side - uniform_side);
    g.normalizer = std::pow(static_cast<double>(std::max<std::uint64_t>(k, 1)),
                            static_cast<double>(s) - 0.5) *
                   std::pow(log_n, static_cast<double>(s) + 0.5);
    return g;
}

}  // namespace psilcm

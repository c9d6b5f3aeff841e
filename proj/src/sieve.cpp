#include "psilcm/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace psilcm {

PrimeTable::PrimeTable(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
    if (limit < 2 || limit > cap) {
        throw resource_limit_error("sieve limit " + std::to_string(limit) +
                                   " outside [2, " + std::to_string(cap) +
                                   "]; raise the cap to go higher");
    }
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
    // Ascending accumulation keeps the rounding error of the prefix sums small.
    const std::uint64_t stored = std::min(limit, kPsiPrefixCap);
    psi_prefix_.assign(stored + 1, 0.0);
    double acc = 0.0;
    for (std::uint64_t m = 2; m <= stored; ++m) {
        acc += von_mangoldt(m);
        psi_prefix_[m] = acc;
    }
}

std::uint64_t PrimeTable::prime_count(std::uint64_t x) const {
    if (x > limit_) throw out_of_table_error("prime_count: x exceeds table limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

bool PrimeTable::is_prime(std::uint64_t p) const {
    if (p < 2) return false;
    if (p > limit_) throw out_of_table_error("is_prime: p exceeds table limit");
    return spf_[p] == p;
}

std::uint32_t PrimeTable::smallest_prime_factor(std::uint64_t a) const {
    if (a < 2 || a > limit_) throw out_of_table_error("smallest_prime_factor: out of range");
    return spf_[a];
}

double PrimeTable::von_mangoldt(std::uint64_t m) const {
    if (m < 1 || m > limit_) throw out_of_table_error("von_mangoldt: m exceeds table limit");
    if (m == 1) return 0.0;
    const std::uint64_t p = spf_[m];
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double PrimeTable::chebyshev_psi(std::uint64_t x) const {
    if (x < 1 || x > limit_) throw out_of_table_error("chebyshev_psi: x exceeds table limit");
    const std::uint64_t stored = psi_prefix_.size() - 1;
    if (x <= stored) return psi_prefix_[x];
    // Tail above the stored prefix: primes in (stored, x] by segmented scan,
    // plus higher powers p^k in that window (p <= sqrt(x) <= stored).
    double tail = 0.0;
    for_each_prime(stored + 1, x, [&](std::uint64_t p) { tail += std::log(static_cast<double>(p)); });
    for (std::uint32_t p : primes_) {
        const std::uint64_t pu = p;
        if (pu * pu > x) break;
        std::uint64_t q = pu * pu;
        while (true) {
            if (q > stored && q <= x) tail += std::log(static_cast<double>(pu));
            if (q > x / pu) break;
            q *= pu;
        }
    }
    return psi_prefix_[stored] + tail;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> PrimeTable::factorize(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("factorize: a must be positive");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    if (a <= limit_) {
        while (a > 1) {
            const std::uint64_t p = spf_[a];
            std::uint32_t e = 0;
            while (a % p == 0) { a /= p; ++e; }
            out.emplace_back(p, e);
        }
        return out;
    }
    if (a > limit_ * limit_) {
        throw out_of_table_error("factorize: a exceeds limit^2 trial-division range");
    }
    for (std::uint32_t p : primes_) {
        const std::uint64_t pu = p;
        if (pu * pu > a) break;
        if (a % pu == 0) {
            std::uint32_t e = 0;
            while (a % pu == 0) { a /= pu; ++e; }
            out.emplace_back(pu, e);
        }
    }
    if (a > 1) out.emplace_back(a, 1);  // cofactor has no factor <= sqrt, hence prime
    return out;
}

std::uint64_t PrimeTable::euler_phi(std::uint64_t q) const {
    std::uint64_t phi = q;
    for (const auto& [p, e] : factorize(q)) {
        phi -= phi / p;
    }
    return phi;
}

PrimeTable build_prime_table(std::uint64_t limit, std::uint64_t cap) {
    return PrimeTable(limit, cap);
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn,
                    std::uint64_t segment_size) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<std::uint64_t>(lo, 2);
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<std::uint64_t> base;
    {
        std::vector<bool> comp(root + 1, false);
        for (std::uint64_t i = 2; i <= root; ++i) {
            if (!comp[i]) {
                base.push_back(i);
                for (std::uint64_t j = i * i; j <= root; j += i) comp[j] = true;
            }
        }
    }
    std::vector<bool> seg;
    for (std::uint64_t start = lo; start <= hi; start += segment_size) {
        const std::uint64_t end = std::min(hi, start + segment_size - 1);
        seg.assign(end - start + 1, true);
        for (std::uint64_t p : base) {
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) seg[j - start] = false;
        }
        for (std::uint64_t m = start; m <= end; ++m) {
            if (seg[m - start] && m >= 2) fn(m);
        }
    }
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t n, const PrimeTable& t) {
    if (n > t.limit()) throw out_of_table_error("prime_powers_up_to: n exceeds table limit");
    std::vector<PrimePower> pps;
    for (std::uint32_t p : t.primes()) {
        const std::uint64_t pu = p;
        if (pu > n) break;
        const double lp = std::log(static_cast<double>(pu));
        for (std::uint64_t q = pu; q <= n; q = (q > n / pu) ? n + 1 : q * pu) {
            pps.push_back({q, pu, lp});
        }
    }
    std::sort(pps.begin(), pps.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
    return pps;
}

}  // namespace psilcm

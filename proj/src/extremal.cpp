#include "psilcm/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace psilcm {
namespace {

// DFS over products of primes <= y staying <= x. Visits every smooth
// number exactly once.
template <typename Fn>
void walk_smooth(std::uint64_t x, const std::vector<std::uint64_t>& primes, std::size_t from,
                 std::uint64_t prod, Fn&& visit) {
    visit(prod);
    for (std::size_t i = from; i < primes.size(); ++i) {
        if (primes[i] > x / prod) break;
        walk_smooth(x, primes, i, prod * primes[i], visit);
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t y, const PrimeTable& t) {
    std::vector<std::uint64_t> ps;
    for (std::uint32_t p : t.primes()) {
        if (p > y) break;
        ps.push_back(p);
    }
    return ps;
}

}  // namespace

std::uint64_t smooth_count(std::uint64_t x, std::uint64_t y, const PrimeTable& t) {
    if (x > t.limit()) throw out_of_table_error("smooth_count: x exceeds table limit");
    if (x == 0) return 0;
    if (y >= x) return x;
    std::uint64_t count = 0;
    walk_smooth(x, primes_up_to(y, t), 0, 1, [&](std::uint64_t) { ++count; });
    return count;
}

std::pair<IntegerSet, SmoothSetSpec> build_smooth_set(std::uint64_t n, std::uint64_t k,
                                                      const PrimeTable& t) {
    if (k > n) throw std::invalid_argument("build_smooth_set: k > n");
    if (n > t.limit()) throw out_of_table_error("build_smooth_set: n exceeds table limit");
    if (k == 0) {
        return {IntegerSet(n, {}), SmoothSetSpec{n, 0, 1, 0.0}};
    }
    // Minimal prime y with Psi(n;y) >= k; y = 1 (empty prime set) covers k = 1.
    std::uint64_t y = 1;
    if (k > 1) {
        // Psi(n;y) is monotone in y: binary search the prime list.
        const auto& primes = t.primes();
        std::uint64_t lo = 0, hi = t.prime_count(n) - 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (smooth_count(n, primes[mid], t) >= k) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        y = primes[lo];
    }
    std::vector<std::uint64_t> smooth;
    walk_smooth(n, primes_up_to(y, t), 0, 1, [&](std::uint64_t m) { smooth.push_back(m); });
    std::sort(smooth.begin(), smooth.end());
    smooth.resize(k);
    const double lln = std::log(std::log(static_cast<double>(n)));
    const double t_eff = y > 1 ? std::log(static_cast<double>(y)) / lln : 0.0;
    return {IntegerSet(n, std::move(smooth)), SmoothSetSpec{n, k, y, t_eff}};
}

double psi_smooth_closed_form(std::uint64_t n, std::uint64_t y, const PrimeTable& t) {
    if (y > t.limit()) throw out_of_table_error("psi_smooth_closed_form: y exceeds table limit");
    double s = 0.0;
    for (std::uint32_t p : t.primes()) {
        if (p > y) break;
        // largest e with p^e <= n, by integer arithmetic
        std::uint64_t e = 0;
        for (std::uint64_t q = p; q <= n; q = (q > n / p) ? n + 1 : q * p) ++e;
        s += static_cast<double>(e) * std::log(static_cast<double>(p));
    }
    return s;
}

IntegerSet build_prime_tail_set(std::uint64_t n, std::uint64_t k, const PrimeTable& t) {
    if (k > n) throw std::invalid_argument("build_prime_tail_set: k > n");
    if (n > t.limit()) throw out_of_table_error("build_prime_tail_set: n exceeds table limit");
    const auto& primes = t.primes();
    const std::uint64_t pi_n = t.prime_count(n);
    std::vector<std::uint64_t> elems;
    if (k <= pi_n) {
        for (std::uint64_t i = pi_n - k; i < pi_n; ++i) elems.push_back(primes[i]);
    } else {
        for (std::uint64_t i = 0; i < pi_n; ++i) elems.push_back(primes[i]);
        std::uint64_t need = k - pi_n;
        for (std::uint64_t m = n; need > 0 && m >= 1; --m) {
            if (m >= 2 && t.is_prime(m)) continue;
            elems.push_back(m);
            --need;
        }
    }
    return IntegerSet(n, std::move(elems));
}

ExtremalBounds extremal_bounds(std::uint64_t n, double theta, double c) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("extremal_bounds: theta outside (0,1)");
    if (!(c > 0.0)) throw std::invalid_argument("extremal_bounds: c must be positive");
    const auto nd = static_cast<double>(n);
    if (c * std::pow(nd, theta) > nd)
        throw std::invalid_argument("extremal_bounds: c n^theta exceeds n");
    const double log_n = std::log(nd);
    return {c * std::pow(nd, theta) * log_n,
            std::pow(log_n, 2.0 + theta / (1.0 - theta))};
}

double cep_prediction(double x, double y) {
    if (!(y >= 2.0) || !(x >= y)) throw std::invalid_argument("cep_prediction: need x >= y >= 2");
    const double u = std::log(x) / std::log(y);
    return x * std::exp(-u * std::log(u));
}

}  // namespace psilcm

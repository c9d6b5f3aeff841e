#include "psilcm/poly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "psilcm/psi.hpp"

namespace psilcm {

namespace {
constexpr double kEulerGamma = 0.5772156649015328606;
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2) throw std::invalid_argument("IntPolynomial: degree must be >= 1");
    if (coeffs_.back() <= 0)
        throw std::invalid_argument("IntPolynomial: leading coefficient must be positive");
}

__int128 IntPolynomial::eval(std::int64_t x) const {
    __int128 v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

bool quadratic_is_irreducible(const IntPolynomial& f) {
    if (f.degree() != 2) throw std::invalid_argument("quadratic_is_irreducible: degree != 2");
    const auto& a = f.coeffs();
    const __int128 disc = static_cast<__int128>(a[1]) * a[1] - 4 * static_cast<__int128>(a[2]) * a[0];
    if (disc < 0) return true;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
    for (std::int64_t r = std::max<std::int64_t>(0, root - 2); r <= root + 2; ++r) {
        if (static_cast<__int128>(r) * r == disc) return false;
    }
    return true;
}

IntegerSet poly_set(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t) {
    if (n > t.limit() * t.limit())
        throw out_of_table_error("poly_set: n exceeds limit^2 factorization range");
    const int d = f.degree();
    const auto ad = static_cast<double>(f.leading());
    double coeff_sum = 0.0;
    for (std::int64_t a : f.coeffs()) coeff_sum += std::abs(static_cast<double>(a));
    // Beyond this |k| the leading term dominates and |f(k)| > n for sure.
    const auto kstop = static_cast<std::int64_t>(
        std::pow(static_cast<double>(n) / ad, 1.0 / d) + coeff_sum / ad + 2.0);
    std::vector<std::uint64_t> values;
    for (std::int64_t x = -kstop; x <= kstop; ++x) {
        const __int128 v = f.eval(x);
        if (v >= 1 && v <= static_cast<__int128>(n)) {
            values.push_back(static_cast<std::uint64_t>(v));
        }
    }
    return IntegerSet(n, std::move(values));
}

double psi_poly(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t) {
    return psi_of_set(poly_set(f, n, t), t);
}

double predict_linear(const IntPolynomial& f, std::uint64_t n, const PrimeTable& t) {
    if (f.degree() != 1) throw std::invalid_argument("predict_linear: degree != 1");
    const std::int64_t a1 = f.coeffs()[1];
    const std::int64_t a0 = f.coeffs()[0];
    const auto q = static_cast<std::uint64_t>(a1 / std::gcd(a1, std::abs(a0)));
    const std::uint64_t phi_q = t.euler_phi(q);
    double harmonic = 0.0;
    for (std::uint64_t l = 1; l <= q; ++l) {
        if (std::gcd(l, q) == 1) harmonic += 1.0 / static_cast<double>(l);
    }
    return static_cast<double>(n) / static_cast<double>(a1) * static_cast<double>(q) /
           static_cast<double>(phi_q) * harmonic;
}

double predict_quadratic_irreducible(const IntPolynomial& f, std::uint64_t n, double B) {
    if (f.degree() != 2) throw std::invalid_argument("predict_quadratic_irreducible: degree != 2");
    const double x = static_cast<double>(n) / static_cast<double>(f.leading());
    return 0.5 * std::sqrt(x) * std::log(x) + B * std::sqrt(x);
}

double predict_reducible_x2m1(std::uint64_t n) {
    return std::sqrt(static_cast<double>(n));
}

double predict_conjecture(const IntPolynomial& f, std::uint64_t n) {
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("predict_conjecture: degree must be >= 2");
    const double x = static_cast<double>(n) / static_cast<double>(f.leading());
    return (1.0 - 1.0 / d) * std::pow(x, 1.0 / d) * std::log(x);
}

BEstimate estimate_B_constant(std::uint64_t prime_cap) {
    long double series = 0.0L;  // sum over odd primes of (-1/p) log p / (p-1)
    long double block = 0.0L;   // contribution of the last dyadic block (P/2, P]
    const std::uint64_t half = prime_cap / 2;
    if (prime_cap >= 3) {
        for_each_prime(3, prime_cap, [&](std::uint64_t p) {
            const double chi = (p % 4 == 1) ? 1.0 : -1.0;
            const long double term =
                chi * std::log(static_cast<long double>(p)) / static_cast<long double>(p - 1);
            series += term;
            if (p > half) block += term;
        });
    }
    BEstimate e;
    e.value = static_cast<double>(kEulerGamma - 1.0L - std::log(2.0L) / 2.0L - series);
    e.last_block_delta = static_cast<double>(-block);
    e.prime_cap = prime_cap;
    return e;
}

int legendre_minus_one(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) throw std::domain_error("legendre_minus_one: p must be an odd prime");
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) throw std::domain_error("legendre_minus_one: p is composite");
    }
    return p % 4 == 1 ? 1 : -1;
}

}  // namespace psilcm

#include "psilcm/psi.hpp"

#include <cmath>
#include <vector>

namespace psilcm {

double FactoredLcm::log_value() const {
    double s = 0.0;
    for (const auto& [p, e] : exponents) {
        s += static_cast<double>(e) * std::log(static_cast<double>(p));
    }
    return s;
}

void FactoredLcm::absorb(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) {
    for (const auto& [p, e] : factors) {
        auto it = exponents.find(p);
        if (it == exponents.end()) {
            exponents.emplace(p, e);
        } else if (it->second < e) {
            it->second = e;
        }
    }
}

FactoredLcm factored_lcm(const IntegerSet& A, const PrimeTable& t) {
    FactoredLcm lcm;
    for (std::uint64_t a : A.elements()) {
        lcm.absorb(t.factorize(a));
    }
    return lcm;
}

double psi_of_set(const IntegerSet& A, const PrimeTable& t) {
    return factored_lcm(A, t).log_value();
}

double psi_indicator(const IntegerSet& A, const PrimeTable& t) {
    const std::uint64_t n = A.n();
    if (n > t.limit()) throw out_of_table_error("psi_indicator: A.n exceeds table limit");
    std::vector<bool> present(n + 1, false);
    for (std::uint64_t a : A.elements()) present[a] = true;
    double s = 0.0;
    for (const PrimePower& pp : prime_powers_up_to(n, t)) {
        for (std::uint64_t m = pp.value; m <= n; m += pp.value) {
            if (present[m]) {
                s += pp.log_p;
                break;
            }
        }
    }
    return s;
}

boost::multiprecision::cpp_int lcm_exact(const IntegerSet& A, std::size_t digit_cap) {
    using boost::multiprecision::cpp_int;
    cpp_int l = 1;
    for (std::uint64_t a : A.elements()) {
        cpp_int ai = a;
        l = l / gcd(l, ai) * ai;
        if (l.str().size() > digit_cap) {
            throw resource_limit_error("lcm_exact: result exceeds digit cap " +
                                       std::to_string(digit_cap));
        }
    }
    return l;
}

}  // namespace psilcm

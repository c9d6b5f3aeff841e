#include "psilcm/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace psilcm {

double RegimeParams::delta() const {
    return c * std::pow(static_cast<double>(n), theta - 1.0);
}

std::uint64_t RegimeParams::k() const {
    return static_cast<std::uint64_t>(std::llround(c * std::pow(static_cast<double>(n), theta)));
}

void RegimeParams::validate() const {
    if (n < 1) throw std::invalid_argument("RegimeParams: n must be >= 1");
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("RegimeParams: theta outside (0,1]");
    if (!(c > 0.0)) throw std::invalid_argument("RegimeParams: c must be positive");
    const double d = delta();
    if (!(d > 0.0 && d < 1.0))
        throw std::invalid_argument("RegimeParams: derived delta outside (0,1)");
}

double predict_mean(const RegimeParams& r) {
    r.validate();
    const auto nd = static_cast<double>(r.n);
    if (r.theta == 1.0) {
        return r.c * std::log(1.0 / r.c) / (1.0 - r.c) * nd;
    }
    const double nt = std::pow(nd, r.theta);
    return r.c * (1.0 - r.theta) * nt * std::log(nd) - r.c * std::log(r.c) * nt;
}

double bernoulli_main_term(std::uint64_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("bernoulli_main_term: delta outside (0,1)");
    return static_cast<double>(n) * delta * std::log(1.0 / delta) / (1.0 - delta);
}

double epsilon_error(std::uint64_t x, const PrimeTable& t) {
    return t.chebyshev_psi(x) / static_cast<double>(x) - 1.0;
}

double error_envelope(std::uint64_t n, double delta, double C) {
    if (!(C > 0.0)) throw std::invalid_argument("error_envelope: C must be positive");
    const double nd = static_cast<double>(n) * delta;
    if (!(nd > 1.0)) throw std::domain_error("error_envelope: requires n*delta > 1");
    return std::exp(-C * std::sqrt(std::log(nd)));
}

}  // namespace psilcm

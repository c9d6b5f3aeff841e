#include "psilcm/integer_set.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace psilcm {

IntegerSet::IntegerSet(std::uint64_t n, std::vector<std::uint64_t> elements)
    : n_(n), elements_(std::move(elements)) {
    if (n_ < 1) throw std::invalid_argument("IntegerSet: ambient bound n must be >= 1");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (std::uint64_t a : elements_) {
        if (a < 1 || a > n_) {
            throw std::invalid_argument("IntegerSet: element " + std::to_string(a) +
                                        " outside [1, " + std::to_string(n_) + "]");
        }
    }
}

IntegerSet IntegerSet::full(std::uint64_t n) {
    std::vector<std::uint64_t> v(n);
    std::iota(v.begin(), v.end(), 1);
    return IntegerSet(n, std::move(v));
}

IntegerSet IntegerSet::parse(std::uint64_t n, std::istream& in) {
    std::vector<std::uint64_t> v;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            continue;
        }
        std::size_t pos = 0;
        unsigned long long value = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("IntegerSet: bad token '" + tok + "'");
        v.push_back(value);
    }
    return IntegerSet(n, std::move(v));
}

}  // namespace psilcm

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace psilcm {

/// A finite set of distinct integers in [1, n], kept sorted ascending.
/// Immutable after construction; the empty set is valid.
class IntegerSet {
public:
    IntegerSet(std::uint64_t n, std::vector<std::uint64_t> elements);

    std::uint64_t n() const { return n_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    static IntegerSet full(std::uint64_t n);

    // Text format: whitespace-separated positive integers, '#' starts a
    // comment running to end of line.
    static IntegerSet parse(std::uint64_t n, std::istream& in);

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> elements_;
};

}  // namespace psilcm

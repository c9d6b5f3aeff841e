#pragma once

#include <stdexcept>
#include <string>

namespace psilcm {

// Argument exceeds what the prime table (or its trial-division range) covers.
class out_of_table_error : public std::out_of_range {
public:
    explicit out_of_table_error(const std::string& what) : std::out_of_range(what) {}
};

// A configured resource cap was hit; message names the cap and how to raise it.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psilcm

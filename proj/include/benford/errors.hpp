#pragma once

#include <stdexcept>
#include <string>

namespace benford {

// Bad input data: unparseable files, non-positive sample values, malformed
// density specs. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeding a configured resource limit (block counts, digit
// lengths). The CLI maps this to exit code 1.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace benford

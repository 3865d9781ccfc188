#ifndef VMTK_ERRORS_HPP
#define VMTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vmtk {

// Precondition violation (bad vertex, size out of the supported domain, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured budget (orbit cap, search node budget) was exhausted.
// Distinct from a negative answer.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or token stream.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vmtk

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace sweepmc {

/// Bad arguments or malformed input (CLI exit code 2).
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A hard size cap was exceeded, e.g. a dense 2^n matrix request for n
/// beyond the supported range (CLI exit code 3).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to converge or produced an inconsistent result.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sweepmc

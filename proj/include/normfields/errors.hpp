#pragma once

#include <stdexcept>
#include <string>

namespace normfields {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments: mismatched field specs, division by zero, unsupported parameters.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A result would have no known coefficient, or a congruence cannot be
// certified at the requested exponent.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Structural data failed a consistency check (invalid tower, broken group
// closure, failed Galois invariance).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace normfields

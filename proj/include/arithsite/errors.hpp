#pragma once

#include <stdexcept>
#include <string>

namespace arithsite {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input values: zero generators, non-prime where a prime is
// required, literals violating a type invariant.
struct InvalidInputError : Error {
    using Error::Error;
};

// Checked integer arithmetic overflowed. Overflow is always a hard error,
// never wraparound.
struct OverflowError : Error {
    using Error::Error;
};

// An operation whose premise excludes the empty sieve was given one
// (gcd, orbit, sections over the empty open).
struct EmptySieveError : Error {
    using Error::Error;
};

// Argument outside the frame an operation is relativized to.
struct FrameDomainError : Error {
    using Error::Error;
};

// A decision procedure would exceed its configured enumeration budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

} // namespace arithsite

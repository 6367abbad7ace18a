#pragma once

#include <stdexcept>
#include <string>

namespace ccode {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic on values outside an operation's domain (e.g. inverse of zero).
struct DomainError : Error {
    using Error::Error;
};

/// Caller misuse: mixed field contexts, dimension mismatches, malformed input.
struct UsageError : Error {
    using Error::Error;
};

/// Input fails a structural requirement (e.g. rank-deficient where full rank is needed).
struct StructuralError : Error {
    using Error::Error;
};

/// Input violates a documented precondition of the operation.
struct PreconditionError : Error {
    using Error::Error;
};

/// Request exceeds the configured size envelope.
struct ResourceError : Error {
    using Error::Error;
};

/// An identity the library guarantees internally failed to hold; indicates a bug.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace ccode

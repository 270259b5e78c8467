#pragma once

#include <stdexcept>
#include <string>

namespace orbitcodes {

/// Malformed input or inconsistent parameters (bad sizes, non-prime q, k > n, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition
/// (reducible polynomial, non-primitive modulus, singular matrix, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The discrete-log table would exceed the configured size cap.
class LogTableCapExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace orbitcodes

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqcalc {

// Error taxonomy shared across the library. Every throwing contract in the
// public API uses one of these types; plain std::logic_error is reserved for
// internal assertion failures that indicate a bug, not a bad input.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// Exact division requested but the divisor does not divide the dividend.
struct NotDivisible : Error {
    using Error::Error;
};

// Evaluation at a point failed: unassigned variable, zero base with negative
// exponent, or a denominator vanishing at the point.
struct EvaluationError : Error {
    using Error::Error;
};

// A parameterized object (h_{m,s}, (q,h)-binomial base) has no defined value
// for the given parameters.
struct UndefinedParameter : Error {
    using Error::Error;
};

// Adaptive series summation detected divergence or failed to converge within
// the configured term budget.
struct NonConvergence : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

// A structural fact that the mathematics guarantees was violated at runtime
// (e.g. stray normal-ordered terms outside the predicted support). Must never
// fire; firing means an identity the code relies on is false.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::string message, std::size_t offset, std::string expected)
        : Error(std::move(message)), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

}  // namespace pqcalc

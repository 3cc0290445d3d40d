#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jinv {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range request (bad rank, bad subset, bad flag values).
struct InvalidInputError : Error {
    using Error::Error;
};

// A quotient the caller asserted to be exact has a remainder or produces a
// fractional coefficient. This is a semantic signal (the input pair admits
// no exact factorization), not a recoverable arithmetic error.
struct NotDivisibleError : Error {
    NotDivisibleError(const std::string& msg, std::string dividend_repr,
                      std::string divisor_repr)
        : Error(msg),
          dividend(std::move(dividend_repr)),
          divisor(std::move(divisor_repr)) {}
    std::string dividend;
    std::string divisor;
};

struct GroupTooLargeError : Error {
    using Error::Error;
};

struct InvalidSubsetError : Error {
    using Error::Error;
};

// Structural problems in a profile document (missing keys, wrong types).
struct SchemaError : Error {
    using Error::Error;
};

// Value-level problems in a profile entry (violated pinned invariants).
struct ConsistencyError : Error {
    using Error::Error;
};

struct LengthMismatchError : Error {
    using Error::Error;
};

// Exact division succeeded over the integers but the quotient has a negative
// coefficient, so it cannot be a multiset of twist multiplicities.
struct NegativeMultiplicityError : Error {
    NegativeMultiplicityError(const std::string& msg, std::string quotient_repr)
        : Error(msg), quotient(std::move(quotient_repr)) {}
    std::string quotient;
};

struct InconsistentInputError : Error {
    using Error::Error;
};

struct NotHalfSpinError : Error {
    using Error::Error;
};

struct InvalidDataError : Error {
    InvalidDataError(const std::string& msg, std::vector<std::string> violation_list)
        : Error(msg), violations(std::move(violation_list)) {}
    std::vector<std::string> violations;
};

// Errors that mean "the request is mathematically inconsistent" as opposed to
// "the request is malformed". The CLI maps the two groups to different exit
// codes.
inline bool is_math_inconsistency(const Error& e) {
    return dynamic_cast<const NotDivisibleError*>(&e) != nullptr ||
           dynamic_cast<const NegativeMultiplicityError*>(&e) != nullptr ||
           dynamic_cast<const InconsistentInputError*>(&e) != nullptr;
}

}  // namespace jinv

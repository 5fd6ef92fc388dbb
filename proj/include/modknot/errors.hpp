// File: errors.hpp
// ----------------------------------------------------------------
// Purpose: Exception hierarchy shared by every module.
//
// All mathematically meaningful failures are reported through typed
// exceptions derived from Error, so callers (and the CLI) can map them
// to precise diagnostics and exit codes.
// ----------------------------------------------------------------
#ifndef MODKNOT_ERRORS_HPP
#define MODKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modknot {

// Base class of all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input could not be parsed (CLI text formats, word strings, spec strings).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Exact polynomial division left a nonzero remainder.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

// Matrix dimensions incompatible with the requested operation.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Quadratic form is not indefinite with non-square discriminant.
struct NotIndefinite : Error {
    explicit NotIndefinite(const std::string& msg) : Error(msg) {}
};

// A continued-fraction period of odd length was supplied.
struct OddPeriod : Error {
    explicit OddPeriod(const std::string& msg) : Error(msg) {}
};

// The one-letter words L and R are excluded from braid-facing operations.
struct MonoletterWord : Error {
    explicit MonoletterWord(const std::string& msg) : Error(msg) {}
};

// Operation requires a Lyndon word.
struct NotLyndon : Error {
    explicit NotLyndon(const std::string& msg) : Error(msg) {}
};

// Closure of the braid is a link with more than one component.
struct NotAKnot : Error {
    explicit NotAKnot(const std::string& msg) : Error(msg) {}
};

// Christoffel parameters must satisfy 0 < p < q with gcd(p,q) = 1.
struct BadFraction : Error {
    explicit BadFraction(const std::string& msg) : Error(msg) {}
};

// Generator index outside 1..n-1.
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// Prime argument fails the p > 3, p ≡ 3 (mod 4) hypothesis.
struct BadPrime : Error {
    explicit BadPrime(const std::string& msg) : Error(msg) {}
};

// Alternating continued-fraction sum not divisible by 3
// (the class-number hypothesis failed).
struct NotDivisibleBy3 : Error {
    explicit NotDivisibleBy3(const std::string& msg) : Error(msg) {}
};

// A documented operation precondition was violated.
struct PrecondViolated : Error {
    explicit PrecondViolated(const std::string& msg) : Error(msg) {}
};

// Alexander-degree argument must be even.
struct OddDegree : Error {
    explicit OddDegree(const std::string& msg) : Error(msg) {}
};

// Internal consistency failure (indicates a bug, not bad input).
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace modknot

#endif // MODKNOT_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace riocirc {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient beyond the truncation order of a Series was requested,
// or an array was built with too few rows for the requested check.
struct TruncationError : Error {
    using Error::Error;
};

// Reciprocal of a series whose constant term is not invertible.
struct SingularSeriesError : Error {
    using Error::Error;
};

// Composition with an inner series of nonzero constant term.
struct CompositionOrderError : Error {
    using Error::Error;
};

// Reversion of a series outside its domain (h_0 != 0 or h_1 not invertible).
struct ReversionDomainError : Error {
    using Error::Error;
};

// Riordan array with a_0 = 0: the matrix is not a proper Riordan array.
struct ImproperArrayError : Error {
    using Error::Error;
};

// A verified identity failed. Raised by the verify_* operations.
struct TheoremViolation : Error {
    using Error::Error;
};

// Malformed textual input (polynomial strings, b-files, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (division by zero, bad K, ...).
struct DomainError : Error {
    using Error::Error;
};

// External resource (OEIS b-file) not reachable and no fixture available.
struct UnavailableError : Error {
    using Error::Error;
};

}  // namespace riocirc

#pragma once

#include <stdexcept>
#include <string>

namespace rbds {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (bad header, unparsable field, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A value or object violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Bad experiment / solver configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure, with path context in the message.
class IoError : public Error {
public:
    using Error::Error;
};

/// Numerical failure (non-finite input to a factorization, failed solve).
class NumericError : public Error {
public:
    using Error::Error;
};

/// The ALM iteration produced a non-finite iterate.
class DivergedError : public NumericError {
public:
    DivergedError(const std::string& msg, int iteration)
        : NumericError(msg), iteration(iteration) {}

    int iteration;
};

} // namespace rbds

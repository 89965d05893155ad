#pragma once

#include <stdexcept>
#include <string>

namespace magspec {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or unreadable user input (files, configs, potentials).
class InputError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to reach its tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A spectral sum would need eigenvalues beyond the computed range.
class TruncationError : public Error {
public:
    using Error::Error;
};

}  // namespace magspec

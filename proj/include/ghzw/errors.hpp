#pragma once

#include <stdexcept>
#include <string>

namespace ghzw {

// Root of every error the library throws. The CLI maps the three branches
// below onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller handed in something outside an operation's domain.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Dimensions do not line up (not a power of two, mismatched operands).
class ShapeError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// A result would exceed the configured dimension cap.
class SizeError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

// Numerical invariant violated: non-Hermitian input, non-PSD, unnormalized.
class NumericError : public Error {
public:
    using Error::Error;
};

class ValidationError : public NumericError {
public:
    using NumericError::NumericError;
};

class NotPsdError : public NumericError {
public:
    using NumericError::NumericError;
};

// Gaussian perturbation cancelled the state vector (norm below 1e-12).
class DegeneratePerturbationError : public NumericError {
public:
    using NumericError::NumericError;
};

// Internal cross-check failed, e.g. a trace that should be real is not.
class ConsistencyError : public NumericError {
public:
    using NumericError::NumericError;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ghzw

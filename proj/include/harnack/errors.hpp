#pragma once

#include <stdexcept>
#include <string>

namespace harnack {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// LU pivot test failed; the matrix is singular to working precision.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Input to the Hermitian eigensolver is not Hermitian.
class NotHermitian : public Error {
public:
    using Error::Error;
};

/// Operation requires a strict contraction (largest singular value < 1
/// with margin) and the input is not one.
class NotContractive : public Error {
public:
    using Error::Error;
};

/// Supplied matrix fails the unitarity check.
class NotUnitary : public Error {
public:
    using Error::Error;
};

/// Iterative eigensolver exceeded its iteration budget.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// Invalid random-generation or search configuration.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Index set is out of range or not strictly increasing.
class InvalidIndexSet : public Error {
public:
    using Error::Error;
};

/// Input lies outside the mathematical domain of the operation.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// Malformed JSON or flag input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace harnack

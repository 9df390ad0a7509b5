#ifndef SUMOD_ERRORS_HPP
#define SUMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sumod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch (non-square determinant, inconsistent operands, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Index outside the matrix or a malformed index set / permutation.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Input violates an operation's precondition (zero pivot, zero glue, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed matrix text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sumod

#endif

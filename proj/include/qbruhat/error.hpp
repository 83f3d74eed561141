#pragma once

#include <stdexcept>
#include <string>

namespace qbruhat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad type, bad literal, sigma outside (0,1), ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Checked integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; always indicates a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace qbruhat

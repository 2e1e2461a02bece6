#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (x < 1, wrong half-plane, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// s = 1 where the operation needs s != 1.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Request exceeds a configured memory or partition budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Requested error radius is not reachable at the working precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A sequence table does not reach the required index.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Kernel outside the closed-form families the exact integrator handles.
class UnsupportedKernelError : public Error {
public:
    using Error::Error;
};

/// An imported bound is used outside its range of validity.
class InapplicableError : public Error {
public:
    using Error::Error;
};

/// Malformed cache file or I/O failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace moebius

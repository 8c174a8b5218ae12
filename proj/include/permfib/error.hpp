#pragma once

#include <stdexcept>
#include <string>

namespace permfib {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: duplicate letters, non-positive parts, bad alphabet, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration was asked to go past its configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Word does not match the regular expression an operation requires.
class NotInLanguage : public Error {
public:
    using Error::Error;
};

/// Object lies outside the domain of a bijection (not in N_n, N'_n, phi(N_n), ...).
class NotInDomain : public Error {
public:
    using Error::Error;
};

/// Power series operation whose precondition on the constant term fails.
class SingularSeries : public Error {
public:
    using Error::Error;
};

} // namespace permfib

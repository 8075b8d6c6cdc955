#pragma once

#include <stdexcept>
#include <string>

namespace lucasnomial {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial division that was expected to be exact left a remainder.
class IndivisibleError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the domain where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration was refused because it would exceed the configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// f = 2^{m+n} C(m+n, m) had a coefficient not divisible by 2^{m+n}.
class InternalParityError : public Error {
public:
    using Error::Error;
};

/// Malformed canonical polynomial text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lucasnomial

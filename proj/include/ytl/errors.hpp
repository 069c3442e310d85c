#pragma once

#include <stdexcept>
#include <string>

namespace ytl {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed partition/multipartition/weight text.
struct ParseError : Error {
    using Error::Error;
};

/// Exact 64-bit arithmetic would wrap.
struct OverflowError : Error {
    using Error::Error;
};

/// A documented precondition was violated (d = 0, n < 3, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Weight total does not match the number of boxes to fill.
struct SizeMismatch : Error {
    using Error::Error;
};

/// Inner partition does not fit inside the outer one.
struct NotContained : Error {
    using Error::Error;
};

/// Operation requires a semistandard tableau.
struct NotSemistandard : Error {
    using Error::Error;
};

} // namespace ytl

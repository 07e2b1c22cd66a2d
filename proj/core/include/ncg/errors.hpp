#ifndef NCG_ERRORS_HPP
#define NCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncg {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad parameters, out-of-range
/// position, mismatched set size, vertices that are not twins, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The requested space has more than the configured maximum of vertices.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An exact search would exceed the configured candidate budget; the result
/// is unknown, never wrong.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (e.g. the constructed graph does not
/// match its closed-form edge count).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ncg

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace rignac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge lists, graph6, JSON scripts).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The input exceeds a documented size limit of an exponential routine.
class LimitError : public Error {
public:
    using Error::Error;
};

} // namespace rignac

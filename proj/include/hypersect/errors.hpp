#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersect {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression; `position` is the 0-based byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), message_(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Operands live over different variable tuples.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The plane {y = 0} lies inside the hypersurface.
class PlaneContainedError : public Error {
public:
    using Error::Error;
};

/// A pencil curve (or the line L0) is a component of the discriminant curve.
class ComponentError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class InternalDisagreement : public Error {
public:
    using Error::Error;
};

}  // namespace hypersect

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A request exceeds a documented size bound (vertex capacity, enumeration limit).
class CapacityError : public Error
{
public:
    using Error::Error;
};

/// An argument is outside the operation's domain.
class ArgumentError : public Error
{
public:
    using Error::Error;
};

/// Malformed text input. `position()` is the 0-based character offset of the fault.
class ParseError : public Error
{
public:
    ParseError(std::size_t position, const std::string & what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ttlab

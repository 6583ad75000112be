#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relog {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed algebra file or formula. `position` is a byte offset (formulas)
/// or a 1-based line number (algebra files); see `where()`.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position, std::string where = "offset")
        : Error(message + " at " + where + " " + std::to_string(position)),
          position_(position),
          where_(std::move(where)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& where() const noexcept { return where_; }

private:
    std::size_t position_;
    std::string where_;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

class DataFileMissing : public Error {
public:
    using Error::Error;
};

/// A configured size budget was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};
using SizeCapExceeded = CapExceeded;

class NotACongruence : public Error {
public:
    using Error::Error;
};

class NotASubuniverse : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    using Error::Error;
};

class NoSharedVariables : public Error {
public:
    using Error::Error;
};

class NotEntailed : public Error {
public:
    using Error::Error;
};

/// The free algebra was exhausted without finding an interpolant. Never
/// expected for the crystal lattice; reported as an anomaly.
class NoInterpolantFound : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace relog

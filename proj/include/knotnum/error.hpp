#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotnum {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed knot notation. `offset()` is the byte offset of the offending
/// character in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An atom whose name does not exist in the prime-knot catalog, e.g. 5_3.
class UnknownAtom : public Error {
public:
    using Error::Error;
};

/// A related number was requested for an atom with no assigned prime.
class MissingPrime : public Error {
public:
    using Error::Error;
};

} // namespace knotnum

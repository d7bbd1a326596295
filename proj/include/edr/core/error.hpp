#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ring spec, element literal or matrix text. `position` is the
/// byte offset into the input where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands belong to different rings") {}
};

/// An operation was asked of a ring kind it does not support.
class UnsupportedRing : public Error {
public:
    using Error::Error;
};

class InfiniteRing : public Error {
public:
    InfiniteRing() : Error("infinite ring") {}
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace edr

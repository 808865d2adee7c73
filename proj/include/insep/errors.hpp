#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace insep {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySetError : public Error {
public:
    EmptySetError() : Error("point set is empty") {}
};

class BoxTooSmallError : public Error {
public:
    using Error::Error;
};

class TooManyPathsError : public Error {
public:
    using Error::Error;
};

class NotAdjacentError : public Error {
public:
    using Error::Error;
};

/// Input is syntactically fine but violates a domain invariant
/// (non-increasing diagonal list, duplicate point, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The criterion and the path oracle disagree. Never expected to fire.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace insep

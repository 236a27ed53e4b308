#pragma once

#include <stdexcept>
#include <string>

namespace irrlat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (coordinate literals, scene files, CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

// A type invariant or construction constraint does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// An internal invariant broke; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace irrlat

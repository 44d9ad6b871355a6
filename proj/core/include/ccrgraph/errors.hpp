#pragma once

#include <stdexcept>
#include <string>

namespace ccrgraph {

// Base of every error the library throws on a violated precondition or an
// unrecoverable outcome. Internal consistency failures use std::logic_error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// A configured size cap (vertex count, dimension, universe size) was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// A finite search could not find the elements it needed. This is a
// legitimate outcome for finite truncations, not a bug.
class ResourceExhausted : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

} // namespace ccrgraph

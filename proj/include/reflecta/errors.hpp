#pragma once

#include <stdexcept>
#include <string>

namespace reflecta {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured bound (group order, |Y(r,n)|) would be exceeded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent computations disagree (oracle vs. exact path).
class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The class-algebra eigenproblem stayed degenerate after all retries.
class DegeneracyUnresolved : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace reflecta

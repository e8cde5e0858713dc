#pragma once

#include <stdexcept>
#include <string>

namespace chromabound {

/// Malformed input: bad file syntax, a loop in a graph, a zero normal vector.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration guard or coloring cap was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where a result is claimed.
class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input does not have the shape a characteristic polynomial must have.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two routes that must agree by a theorem did not.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace chromabound

#ifndef GRAPHCAT_ERROR_HPP
#define GRAPHCAT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertices, overlapping partitions, bad letters.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configured bound (vertex count, partition size, tuple space, integer width) was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Arity mismatch when composing bilabelled graphs.
class CompositionError : public Error {
public:
    using Error::Error;
};

/// Rotation of an empty label tuple.
class ArityError : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Tensor shapes do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A normal subgroup is not invariant under the required maps.
class InvarianceError : public Error {
public:
    using Error::Error;
};

/// Membership in a normal closure could not be decided with the selected strategy.
class IndeterminateError : public Error {
public:
    using Error::Error;
};

/// Query against a graph that is not a fibre of the fibration.
class AbsentFibreError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Seeing this is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require_capacity(std::size_t value, std::size_t bound, const char* what)
{
    if (value > bound) {
        throw CapacityError(std::string(what) + ": " + std::to_string(value) + " exceeds bound "
                            + std::to_string(bound));
    }
}

} // namespace detail

} // namespace graphcat

#endif

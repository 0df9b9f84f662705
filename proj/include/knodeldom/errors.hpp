#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knodeldom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (delta, n) outside the range that defines a Knödel graph.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// A vertex index outside [1, n/2].
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Precondition of an operation violated (mixed sides, empty set, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a closed-form result (e.g. odd n or n < 8).
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Malformed text input (vertex list, edge list, report).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration guard refused the instance.
class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

/// The solver hit its node limit before proving optimality.
class SearchIncomplete : public Error {
public:
    SearchIncomplete(std::int64_t lower, std::int64_t upper, std::uint64_t nodes)
        : Error("search incomplete after " + std::to_string(nodes) +
                " nodes; optimum in [" + std::to_string(lower) + ", " +
                std::to_string(upper) + "]"),
          lower_bound(lower),
          upper_bound(upper),
          nodes_explored(nodes)
    {
    }

    std::int64_t lower_bound;
    std::int64_t upper_bound;
    std::uint64_t nodes_explored;
};

} // namespace knodeldom

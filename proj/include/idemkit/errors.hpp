#pragma once

#include <stdexcept>
#include <string>

namespace idemkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value was tagged for (or lies outside) a different carrier than the
/// semiring operating on it.
class CarrierMismatch : public Error {
public:
    using Error::Error;
};

/// The natural partial order a ⪯ b ⟺ a⊕b = b is only defined on idempotent
/// semirings; asking for it elsewhere is an error, not `false`.
class OrderUndefined : public Error {
public:
    using Error::Error;
};

/// The scalar or matrix closure a* = ⨁ aⁱ does not exist for this element.
class ClosureUndefined : public Error {
public:
    using Error::Error;
};

/// No nth root exists (or none is implemented) for this carrier.
class RootUndefined : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An iterative fixpoint computation did not stabilize within its step bound.
class NotStabilized : public Error {
public:
    explicit NotStabilized(const std::string& msg, std::size_t steps = 0)
        : Error(msg), steps_(steps) {}
    std::size_t steps() const { return steps_; }

private:
    std::size_t steps_;
};

class NotIrreducible : public Error {
public:
    using Error::Error;
};

class UnsupportedSemiring : public Error {
public:
    using Error::Error;
};

/// Shortest-path frontend: a cycle strictly dominating 𝟙 makes path weights
/// unbounded. Carries the index of one offending node (0-based).
class NegativeCycle : public Error {
public:
    NegativeCycle(const std::string& msg, int node) : Error(msg), node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

class ArcMissing : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedDomain : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NegativeInput : public Error {
public:
    using Error::Error;
};

class NonNegativeInput : public Error {
public:
    using Error::Error;
};

class NonPositiveH : public Error {
public:
    using Error::Error;
};

class NonConvexHamiltonian : public Error {
public:
    using Error::Error;
};

class GridTooSmall : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

/// Input file violated the JSON grammar. `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line) : Error(msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input was well-formed but violated a domain invariant; the message names it.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace idemkit

#pragma once

#include <memory>
#include <string>

#include "idemkit/value.hpp"

namespace idemkit {

/// Which payload kind a semiring's carrier uses; drives generic IO.
enum class Carrier : std::uint8_t { ExtendedReal, Bit, Logic3, Polygon, Pair };

/// A semiring descriptor: a named carrier together with ⊕, ⊙, 𝟘, 𝟙, the
/// scalar closure where it exists, and capability flags. Instances are
/// immutable and shared through SemiringPtr; every operation is a pure
/// function of its inputs.
///
/// The natural partial order a ⪯ b ⟺ a⊕b = b, closure, powers and roots are
/// provided on top of the two primitive operations.
class Semiring {
public:
    struct Flags {
        bool idempotent = false;
        bool commutative = false;
        bool cancellative = false;
        bool complete = false; // scalar star total on the carrier
        bool exact = true;     // ⊕/⊙ bit-exact and associative in machine arithmetic
        double tolerance = 0.0;
    };

    virtual ~Semiring() = default;

    const std::string& id() const { return id_; }
    Carrier carrier() const { return carrier_; }
    bool idempotent() const { return flags_.idempotent; }
    bool commutative() const { return flags_.commutative; }
    bool cancellative() const { return flags_.cancellative; }
    bool complete() const { return flags_.complete; }
    bool exact() const { return flags_.exact; }
    double tolerance() const { return flags_.tolerance; }

    virtual Value zero() const = 0;
    virtual Value one() const = 0;

    /// Generalized addition ⊕. Throws CarrierMismatch on foreign values.
    virtual Value add(const Value& a, const Value& b) const = 0;

    /// Generalized multiplication ⊙.
    virtual Value mul(const Value& a, const Value& b) const = 0;

    /// Scalar closure a* = ⨁_{i≥0} aⁱ where defined; ClosureUndefined else.
    virtual Value star(const Value& a) const = 0;

    /// Solves xⁿ = a where the carrier admits it; RootUndefined else.
    virtual Value nth_root(const Value& a, unsigned n) const;

    /// Carrier membership (payload kind and range).
    virtual bool contains(const Value& v) const = 0;

    /// Equality: bit-exact for exact carriers, relative-tolerance otherwise.
    virtual bool equal(const Value& a, const Value& b) const;

    /// Natural partial order a ⪯ b ⟺ a⊕b = b; OrderUndefined when the
    /// semiring is not idempotent (the relation would not be reflexive).
    bool leq(const Value& a, const Value& b) const;

    /// n-fold ⊙-power; a⁰ = 𝟙.
    Value pow(const Value& a, unsigned n) const;

    void require(const Value& v) const;

protected:
    Semiring(std::string id, Carrier carrier, Flags flags)
        : id_(std::move(id)), carrier_(carrier), flags_(flags) {}

private:
    std::string id_;
    Carrier carrier_;
    Flags flags_;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// Parses a stable semiring id into an instance. Grammar:
///   rmax | rmax-bar | rmin | rmin-bar | boolean | logic3 | viterbi | real |
///   polygon | minmax:<a>:<b> | maslov:<h> | product:<id>:<id>
/// where <a>, <b> are numbers or -inf/inf and <h> is a positive number.
/// Throws ValidationError on unknown or malformed ids.
SemiringPtr make_semiring(const std::string& id);

/// Direct-product semiring with component-wise operations (pairs carrier).
SemiringPtr product_semiring(SemiringPtr a, SemiringPtr b);

/// The deformed semiring A_h: ⊕ = h·ln(e^{w₁/h}+e^{w₂/h}), ⊙ = +, on
/// ℝ ∪ {−∞}. Not exact; equality uses relative tolerance (default 1e-9).
SemiringPtr maslov_semiring(double h, double tolerance = 1e-9);

/// Bounded-chain semiring ([a,b], max, min); endpoints may be ±∞.
SemiringPtr minmax_semiring(ExtReal lo, ExtReal hi);

/// The two factors of a product semiring; ValidationError on other instances.
std::pair<SemiringPtr, SemiringPtr> product_factors(const Semiring& s);

} // namespace idemkit

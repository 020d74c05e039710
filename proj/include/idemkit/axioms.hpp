#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "idemkit/semiring.hpp"

namespace idemkit {

/// One verified law with an optional counterexample.
struct AxiomCheck {
    std::string axiom;       // stable key, e.g. "add-associativity"
    std::string description; // human-readable statement
    bool expected;           // whether the descriptor claims the law
    bool holds;              // whether it held on the samples
    std::string witness;     // first counterexample if it did not
};

struct AxiomsReport {
    std::string semiring;
    std::size_t sample_count = 0;
    bool exhaustive = false;
    std::vector<AxiomCheck> checks;

    /// True when every law holds exactly iff the descriptor claims it.
    bool consistent() const;
};

/// Deterministic per-carrier sample set of the requested size, always
/// containing 𝟘 and 𝟙. Finite carriers with at most 4 elements are listed
/// exhaustively instead. Numeric samples are integer-valued so that the
/// exactness claims of exact carriers are testable bit-for-bit.
std::vector<Value> sample_values(const Semiring& s, std::size_t count, std::uint64_t seed);

/// Checks the semiring laws on every triple/pair/element drawn from the
/// samples: associativity of both operations, neutrality of 𝟘 and 𝟙,
/// annihilation by 𝟘, both distributivity laws, commutativity of ⊕, and the
/// flagged laws ⊕-idempotency and ⊙-commutativity.
AxiomsReport axioms_report(const Semiring& s, std::span<const Value> samples);

/// True when the carrier can be listed exhaustively (boolean, logic3).
bool carrier_is_small(const Semiring& s);

} // namespace idemkit

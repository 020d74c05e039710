#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <variant>

#include "idemkit/errors.hpp"
#include "idemkit/polygon.hpp"

namespace idemkit {

/// Extended real with the infinities as distinguished tokens rather than IEEE
/// infinities, so each semiring can tabulate 𝟘⊙∞ and friends explicitly
/// instead of inheriting NaN from machine arithmetic.
struct ExtReal {
    enum class Tag : std::uint8_t { NegInf, Finite, PosInf };

    Tag tag = Tag::Finite;
    double x = 0.0; // meaningful only when tag == Finite

    static ExtReal neg_inf() { return {Tag::NegInf, 0.0}; }
    static ExtReal pos_inf() { return {Tag::PosInf, 0.0}; }
    static ExtReal of(double v) { return {Tag::Finite, v}; }

    bool finite() const { return tag == Tag::Finite; }
    bool neg() const { return tag == Tag::NegInf; }
    bool pos() const { return tag == Tag::PosInf; }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.tag != b.tag) return false;
        return a.tag != Tag::Finite || a.x == b.x;
    }
};

/// Total order NegInf < finite < PosInf; returns -1, 0, +1.
int compare(const ExtReal& a, const ExtReal& b);

ExtReal ext_max(const ExtReal& a, const ExtReal& b);
ExtReal ext_min(const ExtReal& a, const ExtReal& b);

/// Three-valued logic: the Boolean semiring {𝟘, 𝟙} plus an indeterminate
/// middle element; a chain 𝟘 < a < 𝟙 under join/meet.
enum class Logic3 : std::uint8_t { Zero = 0, Ind = 1, One = 2 };

/// Strong wrapper so the Boolean carrier does not decay to arithmetic.
struct Bit {
    bool v = false;
    friend bool operator==(const Bit&, const Bit&) = default;
};

/// A scalar over one of the heterogeneous carriers. Values are immutable and
/// freely shareable; pair payloads are held behind a shared const pointer.
class Value {
public:
    struct PairPayload;
    using PairPtr = std::shared_ptr<const PairPayload>;

    Value() : v_(ExtReal::of(0.0)) {}

    static Value real(double x) { return Value(ExtReal::of(x)); }
    static Value neg_inf() { return Value(ExtReal::neg_inf()); }
    static Value pos_inf() { return Value(ExtReal::pos_inf()); }
    static Value from_ext(ExtReal e) { return Value(e); }
    static Value bit(bool b) { return Value(Bit{b}); }
    static Value logic(Logic3 l) { return Value(l); }
    static Value polygon(IntPolygon p) { return Value(std::move(p)); }
    static Value pair(Value first, Value second);

    bool is_ext() const { return std::holds_alternative<ExtReal>(v_); }
    bool is_bit() const { return std::holds_alternative<Bit>(v_); }
    bool is_logic() const { return std::holds_alternative<Logic3>(v_); }
    bool is_polygon() const { return std::holds_alternative<IntPolygon>(v_); }
    bool is_pair() const { return std::holds_alternative<PairPtr>(v_); }

    const ExtReal& ext() const;
    bool bit_value() const;
    Logic3 logic_value() const;
    const IntPolygon& polygon_value() const;
    const Value& first() const;
    const Value& second() const;

    /// Structural, bit-exact equality (the default notion for exact carriers).
    friend bool operator==(const Value& a, const Value& b);

    std::string to_string() const;

private:
    template <class T>
        requires(!std::is_same_v<std::decay_t<T>, Value>)
    explicit Value(T&& payload) : v_(std::forward<T>(payload)) {}

    std::variant<ExtReal, Bit, Logic3, IntPolygon, PairPtr> v_;
};

struct Value::PairPayload {
    Value first;
    Value second;
};

std::string to_string(Logic3 l);

} // namespace idemkit

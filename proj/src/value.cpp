#include "idemkit/value.hpp"

#include <sstream>

namespace idemkit {

int compare(const ExtReal& a, const ExtReal& b) {
    auto rank = [](const ExtReal& e) { return e.neg() ? 0 : e.finite() ? 1 : 2; };
    const int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra != 1) return 0;
    if (a.x < b.x) return -1;
    if (a.x > b.x) return 1;
    return 0;
}

ExtReal ext_max(const ExtReal& a, const ExtReal& b) { return compare(a, b) >= 0 ? a : b; }
ExtReal ext_min(const ExtReal& a, const ExtReal& b) { return compare(a, b) <= 0 ? a : b; }

Value Value::pair(Value first, Value second) {
    return Value(std::make_shared<const PairPayload>(PairPayload{std::move(first), std::move(second)}));
}

namespace {
[[noreturn]] void wrong_payload(const char* wanted) {
    throw CarrierMismatch(std::string("value does not carry a ") + wanted + " payload");
}
} // namespace

const ExtReal& Value::ext() const {
    if (const auto* e = std::get_if<ExtReal>(&v_)) return *e;
    wrong_payload("numeric");
}

bool Value::bit_value() const {
    if (const auto* b = std::get_if<Bit>(&v_)) return b->v;
    wrong_payload("boolean");
}

Logic3 Value::logic_value() const {
    if (const auto* l = std::get_if<Logic3>(&v_)) return *l;
    wrong_payload("three-valued logic");
}

const IntPolygon& Value::polygon_value() const {
    if (const auto* p = std::get_if<IntPolygon>(&v_)) return *p;
    wrong_payload("polygon");
}

const Value& Value::first() const {
    if (const auto* p = std::get_if<PairPtr>(&v_)) return (*p)->first;
    wrong_payload("pair");
}

const Value& Value::second() const {
    if (const auto* p = std::get_if<PairPtr>(&v_)) return (*p)->second;
    wrong_payload("pair");
}

bool operator==(const Value& a, const Value& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_pair()) return a.first() == b.first() && a.second() == b.second();
    return a.v_ == b.v_;
}

std::string to_string(Logic3 l) {
    switch (l) {
    case Logic3::Zero: return "O";
    case Logic3::Ind: return "a";
    case Logic3::One: return "I";
    }
    return "?";
}

std::string Value::to_string() const {
    std::ostringstream os;
    if (is_ext()) {
        const ExtReal& e = ext();
        if (e.neg()) os << "-inf";
        else if (e.pos()) os << "inf";
        else os << e.x;
    } else if (is_bit()) {
        os << (bit_value() ? "1" : "0");
    } else if (is_logic()) {
        os << idemkit::to_string(logic_value());
    } else if (is_polygon()) {
        os << polygon_value().to_string();
    } else {
        os << '(' << first().to_string() << ", " << second().to_string() << ')';
    }
    return os.str();
}

} // namespace idemkit

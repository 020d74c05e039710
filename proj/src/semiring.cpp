#include "idemkit/semiring.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "idemkit/dequantize.hpp"
#include "idemkit/numfmt.hpp"

namespace idemkit {

void Semiring::require(const Value& v) const {
    if (!contains(v))
        throw CarrierMismatch("value " + v.to_string() + " is not in the carrier of " + id());
}

bool Semiring::equal(const Value& a, const Value& b) const { return a == b; }

bool Semiring::leq(const Value& a, const Value& b) const {
    if (!idempotent())
        throw OrderUndefined("natural order is undefined on non-idempotent semiring " + id());
    return equal(add(a, b), b);
}

Value Semiring::pow(const Value& a, unsigned n) const {
    require(a);
    Value acc = one();
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, a);
    return acc;
}

Value Semiring::nth_root(const Value&, unsigned) const {
    throw RootUndefined("nth root is not implemented on " + id());
}

namespace {

// ---------------------------------------------------------------------------
// Numeric carriers (extended reals)
// ---------------------------------------------------------------------------

const ExtReal& num(const Semiring& s, const Value& v) {
    s.require(v);
    return v.ext();
}

/// ℝ_max = (ℝ ∪ {−∞}, max, +) and its completion with a top element ∞
/// obeying a⊕∞ = ∞, 𝟘⊙∞ = 𝟘, a⊙∞ = ∞ for a ≠ 𝟘.
class RmaxSemiring final : public Semiring {
public:
    explicit RmaxSemiring(bool completed)
        : Semiring(completed ? "rmax-bar" : "rmax", Carrier::ExtendedReal,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = !completed,
                         .complete = completed,
                         .exact = true}),
          completed_(completed) {}

    Value zero() const override { return Value::neg_inf(); }
    Value one() const override { return Value::real(0.0); }

    bool contains(const Value& v) const override {
        if (!v.is_ext()) return false;
        return completed_ || !v.ext().pos();
    }

    Value add(const Value& a, const Value& b) const override {
        return Value::from_ext(ext_max(num(*this, a), num(*this, b)));
    }

    Value mul(const Value& a, const Value& b) const override {
        const ExtReal &x = num(*this, a), &y = num(*this, b);
        if (x.neg() || y.neg()) return Value::neg_inf(); // 𝟘 annihilates, also 𝟘⊙∞
        if (x.pos() || y.pos()) return Value::pos_inf();
        return Value::real(x.x + y.x);
    }

    Value star(const Value& a) const override {
        if (compare(num(*this, a), ExtReal::of(0.0)) <= 0) return one();
        if (completed_) return Value::pos_inf();
        throw ClosureUndefined("star undefined in rmax for " + a.to_string() + " with 1 < a");
    }

    Value nth_root(const Value& a, unsigned n) const override {
        const ExtReal& x = num(*this, a);
        return x.finite() ? Value::real(x.x / n) : a;
    }

private:
    bool completed_;
};

/// ℝ_min = (ℝ ∪ {+∞}, min, +); the completion adds −∞ as the top element.
class RminSemiring final : public Semiring {
public:
    explicit RminSemiring(bool completed)
        : Semiring(completed ? "rmin-bar" : "rmin", Carrier::ExtendedReal,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = !completed,
                         .complete = completed,
                         .exact = true}),
          completed_(completed) {}

    Value zero() const override { return Value::pos_inf(); }
    Value one() const override { return Value::real(0.0); }

    bool contains(const Value& v) const override {
        if (!v.is_ext()) return false;
        return completed_ || !v.ext().neg();
    }

    Value add(const Value& a, const Value& b) const override {
        return Value::from_ext(ext_min(num(*this, a), num(*this, b)));
    }

    Value mul(const Value& a, const Value& b) const override {
        const ExtReal &x = num(*this, a), &y = num(*this, b);
        if (x.pos() || y.pos()) return Value::pos_inf();
        if (x.neg() || y.neg()) return Value::neg_inf();
        return Value::real(x.x + y.x);
    }

    Value star(const Value& a) const override {
        if (compare(num(*this, a), ExtReal::of(0.0)) >= 0) return one();
        if (completed_) return Value::neg_inf();
        throw ClosureUndefined("star undefined in rmin for " + a.to_string() + " with 1 < a");
    }

    Value nth_root(const Value& a, unsigned n) const override {
        const ExtReal& x = num(*this, a);
        return x.finite() ? Value::real(x.x / n) : a;
    }

private:
    bool completed_;
};

/// The max-times semiring (ℝ₊, max, ·), 𝟘 = 0, 𝟙 = 1.
class ViterbiSemiring final : public Semiring {
public:
    ViterbiSemiring()
        : Semiring("viterbi", Carrier::ExtendedReal,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = true,
                         .complete = false,
                         .exact = true}) {}

    Value zero() const override { return Value::real(0.0); }
    Value one() const override { return Value::real(1.0); }

    bool contains(const Value& v) const override {
        return v.is_ext() && v.ext().finite() && v.ext().x >= 0.0;
    }

    Value add(const Value& a, const Value& b) const override {
        return Value::real(std::max(num(*this, a).x, num(*this, b).x));
    }

    Value mul(const Value& a, const Value& b) const override {
        return Value::real(num(*this, a).x * num(*this, b).x);
    }

    Value star(const Value& a) const override {
        if (num(*this, a).x <= 1.0) return one();
        throw ClosureUndefined("star undefined in viterbi for " + a.to_string() + " with 1 < a");
    }

    Value nth_root(const Value& a, unsigned n) const override {
        return Value::real(std::pow(num(*this, a).x, 1.0 / n));
    }
};

/// The field ℝ seen as a (non-idempotent) semiring; a* = (𝟙 − a)⁻¹.
class RealSemiring final : public Semiring {
public:
    RealSemiring()
        : Semiring("real", Carrier::ExtendedReal,
                   Flags{.idempotent = false,
                         .commutative = true,
                         .cancellative = true,
                         .complete = false,
                         .exact = true}) {}

    Value zero() const override { return Value::real(0.0); }
    Value one() const override { return Value::real(1.0); }

    bool contains(const Value& v) const override { return v.is_ext() && v.ext().finite(); }

    Value add(const Value& a, const Value& b) const override {
        return Value::real(num(*this, a).x + num(*this, b).x);
    }

    Value mul(const Value& a, const Value& b) const override {
        return Value::real(num(*this, a).x * num(*this, b).x);
    }

    Value star(const Value& a) const override {
        const double x = num(*this, a).x;
        if (x == 1.0) throw ClosureUndefined("star undefined in real field at a = 1");
        return Value::real(1.0 / (1.0 - x));
    }

    Value nth_root(const Value& a, unsigned n) const override {
        const double x = num(*this, a).x;
        if (x >= 0.0) return Value::real(std::pow(x, 1.0 / n));
        if (n % 2 == 1) return Value::real(-std::pow(-x, 1.0 / n));
        throw RootUndefined("no real even-order root of a negative element");
    }
};

/// ([a,b], max, min): every bounded chain is an idempotent semiring.
class MinmaxSemiring final : public Semiring {
public:
    MinmaxSemiring(ExtReal lo, ExtReal hi)
        : Semiring("minmax:" + fmt(lo) + ":" + fmt(hi), Carrier::ExtendedReal,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = false,
                         .complete = true,
                         .exact = true}),
          lo_(lo), hi_(hi) {
        if (compare(lo, hi) >= 0)
            throw ValidationError("minmax endpoints must satisfy a < b");
    }

    Value zero() const override { return Value::from_ext(lo_); }
    Value one() const override { return Value::from_ext(hi_); }

    bool contains(const Value& v) const override {
        if (!v.is_ext()) return false;
        return compare(lo_, v.ext()) <= 0 && compare(v.ext(), hi_) <= 0;
    }

    Value add(const Value& a, const Value& b) const override {
        return Value::from_ext(ext_max(num(*this, a), num(*this, b)));
    }

    Value mul(const Value& a, const Value& b) const override {
        return Value::from_ext(ext_min(num(*this, a), num(*this, b)));
    }

    Value star(const Value& a) const override {
        require(a);
        return one();
    }

    Value nth_root(const Value& a, unsigned) const override {
        require(a);
        return a; // ⊙ is idempotent
    }

    static std::string fmt(const ExtReal& e) {
        if (e.neg()) return "-inf";
        if (e.pos()) return "inf";
        return format_double(e.x);
    }

private:
    ExtReal lo_, hi_;
};

/// The deformed semiring A_h of the dequantization map D_h(u) = h·ln u.
class MaslovSemiring final : public Semiring {
public:
    MaslovSemiring(double h, double tol)
        : Semiring("maslov:" + format_double(h), Carrier::ExtendedReal,
                   Flags{.idempotent = false,
                         .commutative = true,
                         .cancellative = true,
                         .complete = false,
                         .exact = false,
                         .tolerance = tol}),
          h_(h) {
        if (!(h > 0.0)) throw NonPositiveH("maslov deformation parameter must be positive");
    }

    double h() const { return h_; }

    Value zero() const override { return Value::neg_inf(); }
    Value one() const override { return Value::real(0.0); }

    bool contains(const Value& v) const override { return v.is_ext() && !v.ext().pos(); }

    Value add(const Value& a, const Value& b) const override {
        const ExtReal &x = num(*this, a), &y = num(*this, b);
        if (x.neg()) return b;
        if (y.neg()) return a;
        return Value::real(deformed_add_max(x.x, y.x, h_));
    }

    Value mul(const Value& a, const Value& b) const override {
        const ExtReal &x = num(*this, a), &y = num(*this, b);
        if (x.neg() || y.neg()) return Value::neg_inf();
        return Value::real(x.x + y.x);
    }

    Value star(const Value& a) const override {
        const ExtReal& x = num(*this, a);
        if (x.neg()) return one();
        // geometric series through the isomorphism with (ℝ₊, +, ·):
        // e^{s/h} = 1 / (1 - e^{w/h}) requires e^{w/h} < 1.
        if (x.x < 0.0) return Value::real(-h_ * std::log1p(-std::exp(x.x / h_)));
        throw ClosureUndefined("star undefined in " + id() + " for " + a.to_string());
    }

    Value nth_root(const Value& a, unsigned n) const override {
        const ExtReal& x = num(*this, a);
        return x.finite() ? Value::real(x.x / n) : a;
    }

    bool equal(const Value& a, const Value& b) const override {
        if (!a.is_ext() || !b.is_ext()) return a == b;
        const ExtReal &x = a.ext(), &y = b.ext();
        if (!x.finite() || !y.finite()) return x == y;
        const double scale = std::max({1.0, std::abs(x.x), std::abs(y.x)});
        return std::abs(x.x - y.x) <= tolerance() * scale;
    }

private:
    double h_;
};

// ---------------------------------------------------------------------------
// Finite carriers
// ---------------------------------------------------------------------------

class BooleanSemiring final : public Semiring {
public:
    BooleanSemiring()
        : Semiring("boolean", Carrier::Bit,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = true,
                         .complete = true,
                         .exact = true}) {}

    Value zero() const override { return Value::bit(false); }
    Value one() const override { return Value::bit(true); }
    bool contains(const Value& v) const override { return v.is_bit(); }

    Value add(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::bit(a.bit_value() || b.bit_value());
    }

    Value mul(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::bit(a.bit_value() && b.bit_value());
    }

    Value star(const Value& a) const override {
        require(a);
        return one();
    }

    Value nth_root(const Value& a, unsigned) const override {
        require(a);
        return a;
    }
};

/// Three-valued logic as the chain 𝟘 < a < 𝟙 with join/meet; the truth
/// table (𝟘⊕a = a, 𝟙⊕a = 𝟙, a⊕a = a, 𝟘⊙a = 𝟘, 𝟙⊙a = a, a⊙a = a) is
/// exactly max/min of ranks.
class Logic3Semiring final : public Semiring {
public:
    Logic3Semiring()
        : Semiring("logic3", Carrier::Logic3,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = false,
                         .complete = true,
                         .exact = true}) {}

    Value zero() const override { return Value::logic(Logic3::Zero); }
    Value one() const override { return Value::logic(Logic3::One); }
    bool contains(const Value& v) const override { return v.is_logic(); }

    Value add(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::logic(std::max(a.logic_value(), b.logic_value()));
    }

    Value mul(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::logic(std::min(a.logic_value(), b.logic_value()));
    }

    Value star(const Value& a) const override {
        require(a);
        return one();
    }

    Value nth_root(const Value& a, unsigned) const override {
        require(a);
        return a;
    }
};

// ---------------------------------------------------------------------------
// Convex integer polygons (a set-valued carrier with exact integer geometry)
// ---------------------------------------------------------------------------

class PolygonSemiring final : public Semiring {
public:
    PolygonSemiring()
        : Semiring("polygon", Carrier::Polygon,
                   Flags{.idempotent = true,
                         .commutative = true,
                         .cancellative = true,
                         .complete = false,
                         .exact = true}) {}

    Value zero() const override { return Value::polygon(IntPolygon{}); }
    Value one() const override { return Value::polygon(IntPolygon::origin()); }
    bool contains(const Value& v) const override { return v.is_polygon(); }

    Value add(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::polygon(a.polygon_value().merged_hull(b.polygon_value()));
    }

    Value mul(const Value& a, const Value& b) const override {
        require(a);
        require(b);
        return Value::polygon(a.polygon_value().minkowski_sum(b.polygon_value()));
    }

    Value star(const Value& a) const override {
        require(a);
        // a ⪯ 𝟙 only for ∅ and {0}; all other powers grow without bound.
        const IntPolygon& p = a.polygon_value();
        if (p.empty() || p == IntPolygon::origin()) return one();
        throw ClosureUndefined("star undefined in polygon semiring for " + a.to_string());
    }
};

// ---------------------------------------------------------------------------
// Direct product
// ---------------------------------------------------------------------------

class ProductSemiring final : public Semiring {
public:
    ProductSemiring(SemiringPtr a, SemiringPtr b)
        : Semiring("product:" + a->id() + ":" + b->id(), Carrier::Pair,
                   Flags{.idempotent = a->idempotent() && b->idempotent(),
                         .commutative = a->commutative() && b->commutative(),
                         .cancellative = false,
                         .complete = a->complete() && b->complete(),
                         .exact = a->exact() && b->exact(),
                         .tolerance = std::max(a->tolerance(), b->tolerance())}),
          a_(std::move(a)), b_(std::move(b)) {}

    Value zero() const override { return Value::pair(a_->zero(), b_->zero()); }
    Value one() const override { return Value::pair(a_->one(), b_->one()); }

    bool contains(const Value& v) const override {
        return v.is_pair() && a_->contains(v.first()) && b_->contains(v.second());
    }

    Value add(const Value& x, const Value& y) const override {
        require(x);
        require(y);
        return Value::pair(a_->add(x.first(), y.first()), b_->add(x.second(), y.second()));
    }

    Value mul(const Value& x, const Value& y) const override {
        require(x);
        require(y);
        return Value::pair(a_->mul(x.first(), y.first()), b_->mul(x.second(), y.second()));
    }

    Value star(const Value& x) const override {
        require(x);
        return Value::pair(a_->star(x.first()), b_->star(x.second()));
    }

    bool equal(const Value& x, const Value& y) const override {
        if (!x.is_pair() || !y.is_pair()) return false;
        return a_->equal(x.first(), y.first()) && b_->equal(x.second(), y.second());
    }

    const SemiringPtr& left() const { return a_; }
    const SemiringPtr& right() const { return b_; }

private:
    SemiringPtr a_, b_;
};

// ---------------------------------------------------------------------------
// Id parser
// ---------------------------------------------------------------------------

std::vector<std::string> split_tokens(const std::string& id) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : id) {
        if (c == ':') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

ExtReal parse_endpoint(const std::string& tok) {
    if (tok == "-inf") return ExtReal::neg_inf();
    if (tok == "inf" || tok == "+inf") return ExtReal::pos_inf();
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size())
        throw ValidationError("malformed number '" + tok + "' in semiring id");
    return ExtReal::of(v);
}

SemiringPtr parse_tokens(const std::vector<std::string>& toks, std::size_t& pos) {
    if (pos >= toks.size()) throw ValidationError("truncated semiring id");
    const std::string head = toks[pos++];
    if (head == "rmax") return std::make_shared<RmaxSemiring>(false);
    if (head == "rmax-bar") return std::make_shared<RmaxSemiring>(true);
    if (head == "rmin") return std::make_shared<RminSemiring>(false);
    if (head == "rmin-bar") return std::make_shared<RminSemiring>(true);
    if (head == "boolean") return std::make_shared<BooleanSemiring>();
    if (head == "logic3") return std::make_shared<Logic3Semiring>();
    if (head == "viterbi") return std::make_shared<ViterbiSemiring>();
    if (head == "real") return std::make_shared<RealSemiring>();
    if (head == "polygon") return std::make_shared<PolygonSemiring>();
    if (head == "minmax") {
        if (pos + 1 >= toks.size()) throw ValidationError("minmax:a:b needs two endpoints");
        ExtReal lo = parse_endpoint(toks[pos++]);
        ExtReal hi = parse_endpoint(toks[pos++]);
        return std::make_shared<MinmaxSemiring>(lo, hi);
    }
    if (head == "maslov") {
        if (pos >= toks.size()) throw ValidationError("maslov:h needs a parameter");
        ExtReal h = parse_endpoint(toks[pos++]);
        if (!h.finite()) throw ValidationError("maslov parameter must be finite");
        return std::make_shared<MaslovSemiring>(h.x, 1e-9);
    }
    if (head == "product") {
        SemiringPtr a = parse_tokens(toks, pos);
        SemiringPtr b = parse_tokens(toks, pos);
        return std::make_shared<ProductSemiring>(std::move(a), std::move(b));
    }
    throw ValidationError("unknown semiring id '" + head + "'");
}

} // namespace

SemiringPtr make_semiring(const std::string& id) {
    const std::vector<std::string> toks = split_tokens(id);
    std::size_t pos = 0;
    SemiringPtr s = parse_tokens(toks, pos);
    if (pos != toks.size()) throw ValidationError("trailing tokens in semiring id '" + id + "'");
    return s;
}

SemiringPtr product_semiring(SemiringPtr a, SemiringPtr b) {
    return std::make_shared<ProductSemiring>(std::move(a), std::move(b));
}

SemiringPtr maslov_semiring(double h, double tolerance) {
    return std::make_shared<MaslovSemiring>(h, tolerance);
}

SemiringPtr minmax_semiring(ExtReal lo, ExtReal hi) {
    return std::make_shared<MinmaxSemiring>(lo, hi);
}

std::pair<SemiringPtr, SemiringPtr> product_factors(const Semiring& s) {
    if (const auto* p = dynamic_cast<const ProductSemiring*>(&s)) return {p->left(), p->right()};
    throw ValidationError(s.id() + " is not a product semiring");
}

} // namespace idemkit

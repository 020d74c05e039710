#include "idemkit/axioms.hpp"

#include <functional>
#include <random>

namespace idemkit {

bool AxiomsReport::consistent() const {
    for (const AxiomCheck& c : checks)
        if (c.holds != c.expected) return false;
    return true;
}

bool carrier_is_small(const Semiring& s) {
    return s.carrier() == Carrier::Bit || s.carrier() == Carrier::Logic3;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (char c : id) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

Value draw_numeric(const Semiring& s, std::mt19937_64& rng) {
    const std::string& id = s.id();
    std::uniform_int_distribution<int> small(-8, 8);
    if (id == "viterbi") {
        std::uniform_int_distribution<int> nonneg(0, 9);
        return Value::real(nonneg(rng));
    }
    if (id == "real") return Value::real(small(rng));
    if (id.rfind("minmax:", 0) == 0) {
        // project a small integer into [a,b]
        for (int tries = 0; tries < 64; ++tries) {
            Value v = Value::real(small(rng));
            if (s.contains(v)) return v;
        }
        return s.one();
    }
    // rmax / rmin / bars / maslov: finite integers plus occasional tokens
    std::uniform_int_distribution<int> token(0, 7);
    if (token(rng) == 0) {
        Value v = Value::neg_inf();
        if (s.contains(v)) return v;
        return Value::pos_inf();
    }
    if (token(rng) == 1) {
        Value v = Value::pos_inf();
        if (s.contains(v)) return v;
    }
    return Value::real(small(rng));
}

Value draw_polygon(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<std::int64_t> coord(-4, 4);
    std::vector<IntPolygon::Point> pts;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) pts.push_back({coord(rng), coord(rng)});
    return Value::polygon(IntPolygon::hull_of(std::move(pts)));
}

} // namespace

std::vector<Value> sample_values(const Semiring& s, std::size_t count, std::uint64_t seed) {
    if (s.carrier() == Carrier::Bit) return {Value::bit(false), Value::bit(true)};
    if (s.carrier() == Carrier::Logic3)
        return {Value::logic(Logic3::Zero), Value::logic(Logic3::Ind), Value::logic(Logic3::One)};

    if (s.carrier() == Carrier::Pair) {
        auto [left, right] = product_factors(s);
        const std::vector<Value> a = sample_values(*left, count, seed);
        const std::vector<Value> b = sample_values(*right, count, seed + 1);
        std::mt19937_64 rng(mix_seed(seed, s.id()));
        std::uniform_int_distribution<std::size_t> ia(0, a.size() - 1), ib(0, b.size() - 1);
        std::vector<Value> out{s.zero(), s.one()};
        while (out.size() < count) out.push_back(Value::pair(a[ia(rng)], b[ib(rng)]));
        return out;
    }

    std::mt19937_64 rng(mix_seed(seed, s.id()));
    std::vector<Value> out{s.zero(), s.one()};
    while (out.size() < count) {
        if (s.carrier() == Carrier::ExtendedReal) {
            out.push_back(draw_numeric(s, rng));
        } else if (s.carrier() == Carrier::Polygon) {
            out.push_back(draw_polygon(rng));
        } else {
            break;
        }
    }
    return out;
}

AxiomsReport axioms_report(const Semiring& s, std::span<const Value> samples) {
    AxiomsReport report;
    report.semiring = s.id();
    report.sample_count = samples.size();
    report.exhaustive = carrier_is_small(s);

    auto fmt1 = [](const Value& a) { return "a=" + a.to_string(); };
    auto fmt2 = [](const Value& a, const Value& b) {
        return "a=" + a.to_string() + " b=" + b.to_string();
    };
    auto fmt3 = [](const Value& a, const Value& b, const Value& c) {
        return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
    };

    auto check = [&](std::string key, std::string desc, bool expected, auto&& law) {
        AxiomCheck c{std::move(key), std::move(desc), expected, true, ""};
        law(c);
        report.checks.push_back(std::move(c));
    };

    auto for_triples = [&](AxiomCheck& c, auto&& predicate) {
        for (const Value& a : samples)
            for (const Value& b : samples)
                for (const Value& x : samples) {
                    if (predicate(a, b, x)) continue;
                    c.holds = false;
                    c.witness = fmt3(a, b, x);
                    return;
                }
    };
    auto for_pairs = [&](AxiomCheck& c, auto&& predicate) {
        for (const Value& a : samples)
            for (const Value& b : samples) {
                if (predicate(a, b)) continue;
                c.holds = false;
                c.witness = fmt2(a, b);
                return;
            }
    };
    auto for_each = [&](AxiomCheck& c, auto&& predicate) {
        for (const Value& a : samples) {
            if (predicate(a)) continue;
            c.holds = false;
            c.witness = fmt1(a);
            return;
        }
    };

    check("add-associativity", "(a+b)+c = a+(b+c)", true, [&](AxiomCheck& c) {
        for_triples(c, [&](const Value& a, const Value& b, const Value& x) {
            return s.equal(s.add(s.add(a, b), x), s.add(a, s.add(b, x)));
        });
    });
    check("mul-associativity", "(a*b)*c = a*(b*c)", true, [&](AxiomCheck& c) {
        for_triples(c, [&](const Value& a, const Value& b, const Value& x) {
            return s.equal(s.mul(s.mul(a, b), x), s.mul(a, s.mul(b, x)));
        });
    });
    check("add-neutral", "0+a = a+0 = a", true, [&](AxiomCheck& c) {
        for_each(c, [&](const Value& a) {
            return s.equal(s.add(s.zero(), a), a) && s.equal(s.add(a, s.zero()), a);
        });
    });
    check("mul-neutral", "1*a = a*1 = a", true, [&](AxiomCheck& c) {
        for_each(c, [&](const Value& a) {
            return s.equal(s.mul(s.one(), a), a) && s.equal(s.mul(a, s.one()), a);
        });
    });
    check("annihilation", "0*a = a*0 = 0", true, [&](AxiomCheck& c) {
        for_each(c, [&](const Value& a) {
            return s.equal(s.mul(s.zero(), a), s.zero()) && s.equal(s.mul(a, s.zero()), s.zero());
        });
    });
    check("left-distributivity", "a*(b+c) = a*b + a*c", true, [&](AxiomCheck& c) {
        for_triples(c, [&](const Value& a, const Value& b, const Value& x) {
            return s.equal(s.mul(a, s.add(b, x)), s.add(s.mul(a, b), s.mul(a, x)));
        });
    });
    check("right-distributivity", "(b+c)*a = b*a + c*a", true, [&](AxiomCheck& c) {
        for_triples(c, [&](const Value& a, const Value& b, const Value& x) {
            return s.equal(s.mul(s.add(b, x), a), s.add(s.mul(b, a), s.mul(x, a)));
        });
    });
    check("add-commutativity", "a+b = b+a", true, [&](AxiomCheck& c) {
        for_pairs(c, [&](const Value& a, const Value& b) { return s.equal(s.add(a, b), s.add(b, a)); });
    });
    check("add-idempotency", "a+a = a", s.idempotent(), [&](AxiomCheck& c) {
        for_each(c, [&](const Value& a) { return s.equal(s.add(a, a), a); });
    });
    check("mul-commutativity", "a*b = b*a", s.commutative(), [&](AxiomCheck& c) {
        for_pairs(c, [&](const Value& a, const Value& b) { return s.equal(s.mul(a, b), s.mul(b, a)); });
    });

    return report;
}

} // namespace idemkit

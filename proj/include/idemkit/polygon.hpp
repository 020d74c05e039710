#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace idemkit {

/// A compact convex set of integer points in the plane, stored as its extreme
/// vertices in counter-clockwise order starting from the lexicographically
/// smallest one. The empty polygon and single points are valid; no two stored
/// vertices are equal and no three consecutive ones are collinear, so equality
/// of canonical forms decides set equality.
class IntPolygon {
public:
    using Point = std::array<std::int64_t, 2>;

    IntPolygon() = default;

    /// Convex hull of an arbitrary point set, canonicalized.
    static IntPolygon hull_of(std::vector<Point> points);

    static IntPolygon point(std::int64_t x, std::int64_t y) { return hull_of({{x, y}}); }
    static IntPolygon origin() { return point(0, 0); }

    bool empty() const { return verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Point>& vertices() const { return verts_; }

    /// Set union followed by convex hull (the semiring ⊕).
    IntPolygon merged_hull(const IntPolygon& other) const;

    /// Minkowski sum {a + b} followed by convex hull (the semiring ⊙).
    /// Vertex-pair sums suffice: conv(A) + conv(B) = conv(vertices sums).
    IntPolygon minkowski_sum(const IntPolygon& other) const;

    bool operator==(const IntPolygon& other) const = default;

    std::string to_string() const;

private:
    std::vector<Point> verts_;
};

} // namespace idemkit

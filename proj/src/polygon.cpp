#include "idemkit/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace idemkit {

namespace {

using Point = IntPolygon::Point;

// Cross product of (b-a) x (c-a). Coordinates stay small enough in this
// project that int64 never overflows (|coord| < 2^30 after repeated sums).
std::int64_t cross(const Point& a, const Point& b, const Point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Andrew's monotone chain with strict turns, so collinear interior points
// are dropped and the result is strictly convex.
std::vector<Point> monotone_chain(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1); // last point repeats the first
    return h;
}

// Rotate so the lexicographically smallest vertex comes first.
void canonical_rotate(std::vector<Point>& v) {
    if (v.size() < 2) return;
    auto lo = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), lo, v.end());
}

} // namespace

IntPolygon IntPolygon::hull_of(std::vector<Point> points) {
    IntPolygon p;
    if (points.empty()) return p;
    p.verts_ = monotone_chain(std::move(points));
    canonical_rotate(p.verts_);
    return p;
}

IntPolygon IntPolygon::merged_hull(const IntPolygon& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    std::vector<Point> pts = verts_;
    pts.insert(pts.end(), other.verts_.begin(), other.verts_.end());
    return hull_of(std::move(pts));
}

IntPolygon IntPolygon::minkowski_sum(const IntPolygon& other) const {
    if (empty() || other.empty()) return {}; // ∅ annihilates
    std::vector<Point> sums;
    sums.reserve(verts_.size() * other.verts_.size());
    for (const Point& a : verts_)
        for (const Point& b : other.verts_)
            sums.push_back({a[0] + b[0], a[1] + b[1]});
    return hull_of(std::move(sums));
}

std::string IntPolygon::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << '(' << verts_[i][0] << ',' << verts_[i][1] << ')';
    }
    os << '}';
    return os.str();
}

} // namespace idemkit

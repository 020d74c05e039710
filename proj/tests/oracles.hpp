#pragma once

// Test-only oracles, kept independent of the library implementations they
// cross-check: a gift-wrapping hull (vs. monotone chain), classical Gaussian
// elimination (vs. semiring Gauss-Jordan), Warshall's algorithm (vs. generic
// closure), simple-cycle enumeration (vs. Karp), and plain-double shortest
// path enumeration (vs. the algebraic route).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracles {

// --- convex geometry -------------------------------------------------------

using IPoint = std::array<std::int64_t, 2>;

inline std::int64_t cross(const IPoint& o, const IPoint& a, const IPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Jarvis march; returns CCW vertices starting from the lexicographic minimum,
// collinear points dropped.
inline std::vector<IPoint> giftwrap_hull(std::vector<IPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<IPoint> hull;
    const IPoint start = pts.front();
    IPoint on = start;
    do {
        hull.push_back(on);
        IPoint best = pts[0] == on ? pts[1] : pts[0];
        for (const IPoint& c : pts) {
            if (c == on) continue;
            const std::int64_t turn = cross(on, best, c);
            const auto d2 = [&](const IPoint& p) {
                const std::int64_t dx = p[0] - on[0], dy = p[1] - on[1];
                return dx * dx + dy * dy;
            };
            if (turn < 0 || (turn == 0 && d2(c) > d2(best))) best = c;
        }
        on = best;
    } while (!(on == start));
    // rotate to the lexicographic minimum (the march already starts there)
    return hull;
}

inline std::vector<IPoint> minkowski_pairs(const std::vector<IPoint>& a,
                                           const std::vector<IPoint>& b) {
    std::vector<IPoint> out;
    for (const IPoint& p : a)
        for (const IPoint& q : b) out.push_back({p[0] + q[0], p[1] + q[1]});
    return out;
}

// --- scalar series ---------------------------------------------------------

inline double geometric_star(double a, int terms = 200) {
    double sum = 0.0, pow = 1.0;
    for (int i = 0; i < terms; ++i) {
        sum += pow;
        pow *= a;
    }
    return sum;
}

// --- classical linear algebra ---------------------------------------------

// Inverse by Gaussian elimination with partial pivoting; throws on (near)
// singular input.
inline std::vector<std::vector<double>> classical_inverse(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12) throw std::runtime_error("singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// --- boolean closure --------------------------------------------------------

// Warshall's triple loop, reflexive closure included.
inline std::vector<std::vector<bool>> warshall(std::vector<std::vector<bool>> r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

// --- cycle enumeration ------------------------------------------------------

struct Cycle {
    std::int64_t weight_sum = 0; // integer arc weights
    int length = 0;
};

// Every simple cycle of an integer-weighted adjacency matrix (absent arcs are
// nullopt); each cycle reported once, at its minimal node.
inline std::vector<Cycle> simple_cycles(const std::vector<std::vector<std::optional<std::int64_t>>>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Cycle> cycles;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, std::int64_t>> stack; // (node, partial sum)

    struct Dfs {
        const std::vector<std::vector<std::optional<std::int64_t>>>& w;
        std::vector<Cycle>& cycles;
        std::vector<bool>& used;
        int start, n;

        void walk(int node, std::int64_t sum, int len) {
            for (int next = start; next < n; ++next) {
                const auto& arc = w[static_cast<std::size_t>(node)][static_cast<std::size_t>(next)];
                if (!arc) continue;
                if (next == start) {
                    cycles.push_back({sum + *arc, len + 1});
                } else if (!used[static_cast<std::size_t>(next)]) {
                    used[static_cast<std::size_t>(next)] = true;
                    walk(next, sum + *arc, len + 1);
                    used[static_cast<std::size_t>(next)] = false;
                }
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        Dfs dfs{w, cycles, used, s, n};
        used[static_cast<std::size_t>(s)] = true;
        dfs.walk(s, 0, 0);
        used[static_cast<std::size_t>(s)] = false;
    }
    return cycles;
}

// Max (or min) cycle mean in double arithmetic, each mean one division of
// exact integer sums; nullopt when acyclic.
inline std::optional<double> cycle_mean_double(
    const std::vector<std::vector<std::optional<std::int64_t>>>& w, bool maximize) {
    std::optional<double> best;
    for (const Cycle& c : simple_cycles(w)) {
        const double mean = static_cast<double>(c.weight_sum) / c.length;
        if (!best || (maximize ? mean > *best : mean < *best)) best = mean;
    }
    return best;
}

// The same optimum as an exact reduced fraction (cross-multiplication only).
inline std::optional<std::pair<std::int64_t, std::int64_t>> cycle_mean_exact(
    const std::vector<std::vector<std::optional<std::int64_t>>>& w, bool maximize) {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    for (const Cycle& c : simple_cycles(w)) {
        if (!best) {
            best = {c.weight_sum, c.length};
            continue;
        }
        const std::int64_t lhs = c.weight_sum * best->second;
        const std::int64_t rhs = best->first * c.length;
        if (maximize ? lhs > rhs : lhs < rhs) best = {c.weight_sum, c.length};
    }
    if (best) {
        const std::int64_t g = std::gcd(std::abs(best->first), static_cast<std::int64_t>(best->second));
        if (g > 1) best = {best->first / g, best->second / g};
    }
    return best;
}

// --- shortest paths in plain doubles ---------------------------------------

// Bellman-Ford-ish DP on walk lengths up to n-1 arcs; infinities as a flag.
inline std::vector<std::vector<double>> allpairs_shortest(
    const std::vector<std::vector<std::optional<double>>>& w) {
    const std::size_t n = w.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (std::size_t round = 0; round + 1 < n; ++round)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    if (w[k][j] && d[i][k] + *w[k][j] < d[i][j]) d[i][j] = d[i][k] + *w[k][j];
    return d;
}

} // namespace oracles

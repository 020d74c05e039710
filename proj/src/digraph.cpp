#include "idemkit/digraph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace idemkit {

Digraph::Digraph(SemiringPtr semiring, int nodes, std::vector<Arc> arcs)
    : semiring_(std::move(semiring)), nodes_(nodes) {
    if (nodes < 0) throw ValidationError("node count must be nonnegative");
    std::map<std::pair<int, int>, Value> merged;
    for (Arc& a : arcs) {
        if (a.from < 0 || a.from >= nodes || a.to < 0 || a.to >= nodes)
            throw ValidationError("arc endpoint out of range: " + std::to_string(a.from + 1) +
                                  " -> " + std::to_string(a.to + 1));
        semiring_->require(a.w);
        auto [it, inserted] = merged.try_emplace({a.from, a.to}, a.w);
        if (!inserted) it->second = semiring_->add(it->second, a.w); // parallel arcs ⊕-merge
    }
    for (auto& [key, w] : merged) {
        if (semiring_->equal(w, semiring_->zero())) continue; // h_ij ≠ 𝟘 invariant
        arcs_.push_back(Arc{key.first, key.second, std::move(w)});
    }
}

std::optional<Value> Digraph::arc_weight(int from, int to) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair(from, to),
                               [](const Arc& a, const std::pair<int, int>& k) {
                                   return std::pair(a.from, a.to) < k;
                               });
    if (it != arcs_.end() && it->from == from && it->to == to) return it->w;
    return std::nullopt;
}

Matrix graph_to_matrix(const Digraph& g) {
    Matrix m(g.semiring(), static_cast<std::size_t>(g.nodes()), static_cast<std::size_t>(g.nodes()));
    for (const Arc& a : g.arcs()) m.set(static_cast<std::size_t>(a.from), static_cast<std::size_t>(a.to), a.w);
    return m;
}

Digraph matrix_to_graph(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("a digraph needs a square matrix");
    const Semiring& s = *m.semiring();
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!s.equal(m.at(i, j), s.zero()))
                arcs.push_back(Arc{static_cast<int>(i), static_cast<int>(j), m.at(i, j)});
    return Digraph(m.semiring(), static_cast<int>(m.rows()), std::move(arcs));
}

Value path_weight(const Digraph& g, const Path& p) {
    const Semiring& s = *g.semiring();
    if (p.nodes.empty()) throw ValidationError("a path needs at least its start node");
    Value acc = s.one();
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        const auto w = g.arc_weight(p.nodes[i], p.nodes[i + 1]);
        if (!w)
            throw ArcMissing("no arc " + std::to_string(p.nodes[i] + 1) + " -> " +
                             std::to_string(p.nodes[i + 1] + 1));
        acc = s.mul(acc, *w);
    }
    return acc;
}

Matrix algebraic_path_solve(const Digraph& g, ClosureMethod method, std::size_t max_steps,
                            double tolerance) {
    const Matrix h = graph_to_matrix(g);
    return method == ClosureMethod::Iterative ? closure_iterative(h, max_steps, tolerance)
                                              : closure_gauss_jordan(h);
}

Matrix brute_force_path_oracle(const Digraph& g, std::size_t max_arcs) {
    if (g.nodes() > 8)
        throw InstanceTooLarge("path enumeration oracle is limited to 8 nodes, got " +
                               std::to_string(g.nodes()));
    const Semiring& s = *g.semiring();
    const std::size_t n = static_cast<std::size_t>(g.nodes());
    Matrix d(g.semiring(), n, n);
    for (std::size_t i = 0; i < n; ++i) d.set(i, i, s.one()); // empty paths

    std::vector<std::vector<std::pair<int, Value>>> out(n);
    for (const Arc& a : g.arcs()) out[static_cast<std::size_t>(a.from)].emplace_back(a.to, a.w);

    // Depth-first over arc sequences, aggregating each visited path's weight.
    struct Walker {
        const Semiring& s;
        const std::vector<std::vector<std::pair<int, Value>>>& out;
        Matrix& d;
        std::size_t start, max_arcs;

        void walk(std::size_t node, const Value& weight, std::size_t arcs_used) {
            if (arcs_used == max_arcs) return;
            for (const auto& [next, w] : out[node]) {
                const Value ext = s.mul(weight, w);
                const std::size_t tgt = static_cast<std::size_t>(next);
                d.set(start, tgt, s.add(d.at(start, tgt), ext));
                walk(tgt, ext, arcs_used + 1);
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        Walker w{s, out, d, i, max_arcs};
        w.walk(i, s.one(), 0);
    }
    return d;
}

namespace {

void require_semiring(const Digraph& g, std::initializer_list<const char*> ids, const char* what) {
    for (const char* id : ids)
        if (g.semiring()->id() == id) return;
    throw UnsupportedSemiring(std::string(what) + " is not defined over " + g.semiring()->id());
}

// A node on a cycle whose weight strictly dominates 𝟙: look at the diagonals
// of the bounded power sums H¹..Hⁿ.
int offending_cycle_node(const Digraph& g) {
    const Semiring& s = *g.semiring();
    const Matrix h = graph_to_matrix(g);
    Matrix power = Matrix::identity(g.semiring(), h.rows());
    for (std::size_t k = 1; k <= h.rows(); ++k) {
        power = mat_mul(power, h);
        for (std::size_t i = 0; i < h.rows(); ++i) {
            const Value& c = power.at(i, i);
            if (s.leq(s.one(), c) && !s.equal(c, s.one())) return static_cast<int>(i);
        }
    }
    return -1;
}

} // namespace

Matrix shortest_paths(const Digraph& g, ClosureMethod method) {
    require_semiring(g, {"rmin", "rmin-bar"}, "the shortest path problem");
    try {
        return algebraic_path_solve(g, method);
    } catch (const NotStabilized&) {
    } catch (const ClosureUndefined&) {
    }
    const int node = offending_cycle_node(g);
    throw NegativeCycle("negative-weight cycle through node " + std::to_string(node + 1), node);
}

Matrix widest_paths(const Digraph& g, ClosureMethod method) {
    require_semiring(g, {"minmax:-inf:inf"}, "the widest path problem");
    return algebraic_path_solve(g, method); // a* = 𝟙 always, so closure exists
}

Matrix real_inverse(const Matrix& h) {
    if (h.semiring()->id() != "real")
        throw UnsupportedSemiring("matrix inversion frontend expects the real field");
    return closure_gauss_jordan(h);
}

std::vector<Value> dp_optimal_profit(const Digraph& g, std::span<const Value> terminal_prize,
                                     std::optional<std::size_t> steps) {
    require_semiring(g, {"rmax"}, "the optimal profit problem");
    const std::size_t n = static_cast<std::size_t>(g.nodes());
    if (terminal_prize.size() != n)
        throw DimensionMismatch("terminal prize vector length must equal the node count");
    Matrix f(g.semiring(), n, 1,
             std::vector<Value>(terminal_prize.begin(), terminal_prize.end()));
    const Matrix h = graph_to_matrix(g);
    Matrix result = f;
    if (steps) {
        for (std::size_t k = 0; k < *steps; ++k) result = mat_mul(h, result);
    } else {
        result = mat_mul(closure_iterative(h), f);
    }
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(result.at(i, 0));
    return out;
}

std::vector<WitnessPath> apsp_witnesses(const Digraph& g, const Matrix& d) {
    const Semiring& s = *g.semiring();
    if (!s.idempotent())
        throw UnsupportedSemiring("witness reconstruction needs an idempotent semiring");
    const std::size_t n = static_cast<std::size_t>(g.nodes());

    // Floyd–Warshall with next-hop tracking; over selective idempotent
    // carriers this reproduces the closure entry by entry.
    Matrix dist = graph_to_matrix(g);
    std::vector<std::vector<int>> next(n, std::vector<int>(n, -1));
    for (const Arc& a : g.arcs()) next[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)] = a.to;
    for (std::size_t i = 0; i < n; ++i) {
        dist.set(i, i, s.add(dist.at(i, i), s.one()));
        next[i][i] = static_cast<int>(i);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Value cand = s.mul(dist.at(i, k), dist.at(k, j));
                const Value joined = s.add(dist.at(i, j), cand);
                if (!s.equal(joined, dist.at(i, j))) {
                    dist.set(i, j, joined);
                    next[i][j] = next[i][k];
                }
            }

    std::vector<WitnessPath> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (s.equal(d.at(i, j), s.zero())) continue;
            if (!s.equal(dist.at(i, j), d.at(i, j)))
                throw Error("witness pass disagrees with the solved distances; "
                            "the carrier is probably not selective");
            WitnessPath w{static_cast<int>(i), static_cast<int>(j), {static_cast<int>(i)}};
            std::size_t u = i;
            for (std::size_t hops = 0; u != j; ++hops) {
                if (next[u][j] < 0 || hops > n)
                    throw Error("witness reconstruction failed for pair " +
                                std::to_string(i + 1) + " -> " + std::to_string(j + 1));
                u = static_cast<std::size_t>(next[u][j]);
                w.nodes.push_back(static_cast<int>(u));
            }
            out.push_back(std::move(w));
        }
    return out;
}

} // namespace idemkit

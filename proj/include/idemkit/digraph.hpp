#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idemkit/matrix.hpp"

namespace idemkit {

/// One weighted arc; node indices are 0-based in memory (files use 1-based).
struct Arc {
    int from = 0;
    int to = 0;
    Value w;
};

/// The weighted digraph M(X, Γ, h, A): n nodes and arcs with non-𝟘 weights,
/// at most one arc per ordered pair. Parallel arcs handed to the constructor
/// are ⊕-merged; a merge that cancels to 𝟘 drops the arc.
class Digraph {
public:
    Digraph(SemiringPtr semiring, int nodes, std::vector<Arc> arcs);

    const SemiringPtr& semiring() const { return semiring_; }
    int nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Weight of the arc (from, to) if present.
    std::optional<Value> arc_weight(int from, int to) const;

private:
    SemiringPtr semiring_;
    int nodes_ = 0;
    std::vector<Arc> arcs_; // sorted by (from, to), unique pairs
};

/// A path y₀, a₁, y₁, …, a_k, y_k given by its node sequence; k = 0 (a single
/// node) is the empty path of weight 𝟙.
struct Path {
    std::vector<int> nodes;
};

/// Matrix with entry (i,j) = arc weight, 𝟘 where no arc exists.
Matrix graph_to_matrix(const Digraph& g);

/// Inverse construction: non-𝟘 entries become arcs.
Digraph matrix_to_graph(const Matrix& m);

/// h(p) = h(a₁)⊙…⊙h(a_k); ArcMissing if the path uses an absent arc.
Value path_weight(const Digraph& g, const Path& p);

enum class ClosureMethod { Iterative, GaussJordan };

/// The Algebraic Path Problem: D = H* with d_ij aggregating all paths i→j
/// (the empty path included when i = j), via the chosen closure method.
Matrix algebraic_path_solve(const Digraph& g, ClosureMethod method,
                            std::size_t max_steps = 0, double tolerance = 0.0);

/// Independent oracle for the path problem: literally enumerates every path
/// with at most max_arcs arcs (depth-first over the arc lists) and
/// ⊕-aggregates the weights. InstanceTooLarge beyond 8 nodes.
Matrix brute_force_path_oracle(const Digraph& g, std::size_t max_arcs);

/// All-pairs shortest distances over rmin/rmin-bar. A cycle with negative
/// total weight raises NegativeCycle for rmin and names an offending node;
/// over rmin-bar the affected entries come out as −∞ instead.
Matrix shortest_paths(const Digraph& g, ClosureMethod method = ClosureMethod::GaussJordan);

/// Maximal bottleneck widths over minmax: d_ij = max over paths of the
/// minimal arc width along the path.
Matrix widest_paths(const Digraph& g, ClosureMethod method = ClosureMethod::GaussJordan);

/// Matrix-inversion frontend: D = (𝟙−H)⁻¹ over the real field through the
/// same universal elimination.
Matrix real_inverse(const Matrix& h);

/// Dynamic programming over rmax: (Hᵏ⊙f) for exactly k steps, or H*⊙f for
/// paths of arbitrary length (requires all cycle weights ⪯ 𝟙).
std::vector<Value> dp_optimal_profit(const Digraph& g, std::span<const Value> terminal_prize,
                                     std::optional<std::size_t> steps);

/// A d_ij-attaining node sequence per finite pair, reconstructed from a
/// Floyd–Warshall pass with via-tracking (selective idempotent carriers).
struct WitnessPath {
    int from = 0;
    int to = 0;
    std::vector<int> nodes;
};

std::vector<WitnessPath> apsp_witnesses(const Digraph& g, const Matrix& d);

} // namespace idemkit

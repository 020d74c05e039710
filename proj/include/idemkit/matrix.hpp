#pragma once

#include <span>
#include <vector>

#include "idemkit/semiring.hpp"

namespace idemkit {

/// Dense matrix over one semiring; entries are row-major. Matrices are value
/// types: operations return new matrices and never mutate their inputs.
class Matrix {
public:
    /// All-𝟘 matrix.
    Matrix(SemiringPtr semiring, std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major entries; validates length and carrier.
    Matrix(SemiringPtr semiring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

    static Matrix identity(SemiringPtr semiring, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SemiringPtr& semiring() const { return semiring_; }
    const Value& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Value v);
    const std::vector<Value>& entries() const { return entries_; }

    bool square() const { return rows_ == cols_; }

private:
    SemiringPtr semiring_;
    std::size_t rows_, cols_;
    std::vector<Value> entries_;
};

/// Entrywise ⊕; DimensionMismatch / CarrierMismatch on incompatible inputs.
Matrix mat_add(const Matrix& x, const Matrix& y);

/// (X⊙Y)_ij = ⨁_k X_ik ⊙ Y_kj with the reduction in ascending k, so results
/// are deterministic also for inexact carriers.
Matrix mat_mul(const Matrix& x, const Matrix& y);

/// Semiring-aware entrywise equality (tolerance applies on inexact carriers).
bool mat_equal(const Matrix& x, const Matrix& y);

/// Entrywise equality within an absolute tolerance on finite numeric values;
/// tolerance 0 falls back to the semiring's own equality.
bool mat_close(const Matrix& x, const Matrix& y, double tolerance);

/// (x, y) = ⨁ᵢ xᵢ⊙yᵢ.
Value scalar_product(const Semiring& s, std::span<const Value> x, std::span<const Value> y);

/// Partial sums H⁽ᴺ⁾ = ⨁_{k≤N} Hᵏ until H⁽ᴺ⁺¹⁾ = H⁽ᴺ⁾. max_steps = 0 picks
/// the default bound: n for idempotent semirings (paths longer than n−1 arcs
/// revisit nodes), 64 otherwise. A positive tolerance loosens the
/// stabilization test for convergent-but-inexact iterations (real field).
/// Throws NotStabilized when the bound is hit.
Matrix closure_iterative(const Matrix& h, std::size_t max_steps = 0, double tolerance = 0.0);

/// Universal Gauss–Jordan elimination: one pass per pivot k rewrites every
/// entry as a_ij ⊕ a_ik ⊙ (a_kk)* ⊙ a_kj (all reads from the pre-pass
/// matrix), then the result is joined with 𝟙. Equals closure_iterative
/// whenever both are defined; over the real field it computes (𝟙−H)⁻¹.
/// Throws ClosureUndefined when a pivot star does not exist.
Matrix closure_gauss_jordan(const Matrix& h);

/// Jacobi iteration for S = HS ⊕ F: S₀ = F, S_{k+1} = H⊙S_k ⊕ F until the
/// fixpoint; the result equals H*⊙F.
Matrix bellman_solve_jacobi(const Matrix& h, const Matrix& f, std::size_t max_steps = 0,
                            double tolerance = 0.0);

/// Gauss–Seidel variant: rows are updated in place in index order, so later
/// rows see this sweep's values; same fixpoint as Jacobi.
Matrix bellman_solve_gauss_seidel(const Matrix& h, const Matrix& f, std::size_t max_steps = 0,
                                  double tolerance = 0.0);

struct EigenPair {
    Value lambda;
    std::vector<Value> vec;
};

/// Spectral data of an irreducible matrix over rmax/rmin: λ is the optimal
/// cycle mean (Karp's recursion) and the vector is a critical column of the
/// λ-normalized closure, so H⊙v = λ⊙v. NotIrreducible when the arc digraph
/// is not strongly connected; UnsupportedSemiring off rmax/rmin.
EigenPair eigen_irreducible(const Matrix& h);

} // namespace idemkit

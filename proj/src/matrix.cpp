#include "idemkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace idemkit {

namespace {

void check_same_semiring(const Matrix& x, const Matrix& y) {
    if (x.semiring()->id() != y.semiring()->id())
        throw CarrierMismatch("matrices over different semirings: " + x.semiring()->id() +
                              " vs " + y.semiring()->id());
}

std::size_t default_steps(const Matrix& h) {
    return h.semiring()->idempotent() ? h.rows() : 64;
}

void check_square(const Matrix& h, const char* what) {
    if (!h.square())
        throw DimensionMismatch(std::string(what) + " needs a square matrix, got " +
                                std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
}

} // namespace

Matrix::Matrix(SemiringPtr semiring, std::size_t rows, std::size_t cols)
    : semiring_(std::move(semiring)), rows_(rows), cols_(cols),
      entries_(rows * cols, semiring_->zero()) {}

Matrix::Matrix(SemiringPtr semiring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : semiring_(std::move(semiring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                " does not match shape " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    for (const Value& v : entries_) semiring_->require(v);
}

Matrix Matrix::identity(SemiringPtr semiring, std::size_t n) {
    Matrix m(semiring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, semiring->one());
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Value v) {
    semiring_->require(v);
    entries_[i * cols_ + j] = std::move(v);
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
    check_same_semiring(x, y);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("matrix addition needs equal shapes");
    const Semiring& s = *x.semiring();
    std::vector<Value> out;
    out.reserve(x.entries().size());
    for (std::size_t i = 0; i < x.entries().size(); ++i)
        out.push_back(s.add(x.entries()[i], y.entries()[i]));
    return Matrix(x.semiring(), x.rows(), x.cols(), std::move(out));
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    check_same_semiring(x, y);
    if (x.cols() != y.rows())
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(x.cols()) +
                                " vs " + std::to_string(y.rows()));
    const Semiring& s = *x.semiring();
    Matrix out(x.semiring(), x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            Value acc = s.zero();
            for (std::size_t k = 0; k < x.cols(); ++k)
                acc = s.add(acc, s.mul(x.at(i, k), y.at(k, j)));
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

bool mat_equal(const Matrix& x, const Matrix& y) {
    if (x.semiring()->id() != y.semiring()->id()) return false;
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    const Semiring& s = *x.semiring();
    for (std::size_t i = 0; i < x.entries().size(); ++i)
        if (!s.equal(x.entries()[i], y.entries()[i])) return false;
    return true;
}

bool mat_close(const Matrix& x, const Matrix& y, double tolerance) {
    if (tolerance <= 0.0) return mat_equal(x, y);
    if (x.semiring()->id() != y.semiring()->id()) return false;
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    const Semiring& s = *x.semiring();
    for (std::size_t i = 0; i < x.entries().size(); ++i) {
        const Value &a = x.entries()[i], &b = y.entries()[i];
        if (a.is_ext() && b.is_ext() && a.ext().finite() && b.ext().finite()) {
            if (std::abs(a.ext().x - b.ext().x) > tolerance) return false;
        } else if (!s.equal(a, b)) {
            return false;
        }
    }
    return true;
}

Value scalar_product(const Semiring& s, std::span<const Value> x, std::span<const Value> y) {
    if (x.size() != y.size())
        throw DimensionMismatch("scalar product needs vectors of equal length");
    Value acc = s.zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = s.add(acc, s.mul(x[i], y[i]));
    return acc;
}

Matrix closure_iterative(const Matrix& h, std::size_t max_steps, double tolerance) {
    check_square(h, "closure");
    if (max_steps == 0) max_steps = default_steps(h);
    Matrix sum = Matrix::identity(h.semiring(), h.rows());
    Matrix power = sum;
    for (std::size_t k = 1; k <= max_steps + 1; ++k) {
        power = mat_mul(power, h);
        Matrix next = mat_add(sum, power);
        if (mat_close(next, sum, tolerance)) return sum;
        sum = std::move(next);
    }
    throw NotStabilized("matrix closure did not stabilize within " + std::to_string(max_steps) +
                            " steps",
                        max_steps);
}

Matrix closure_gauss_jordan(const Matrix& h) {
    check_square(h, "closure");
    const Semiring& s = *h.semiring();
    const std::size_t n = h.rows();
    Matrix m = h;
    for (std::size_t k = 0; k < n; ++k) {
        Value pivot_star;
        try {
            pivot_star = s.star(m.at(k, k));
        } catch (const ClosureUndefined& e) {
            throw ClosureUndefined("pivot " + std::to_string(k + 1) + ": " + e.what());
        }
        Matrix next = m;
        for (std::size_t i = 0; i < n; ++i) {
            const Value through = s.mul(m.at(i, k), pivot_star);
            for (std::size_t j = 0; j < n; ++j)
                next.set(i, j, s.add(m.at(i, j), s.mul(through, m.at(k, j))));
        }
        m = std::move(next);
    }
    return mat_add(m, Matrix::identity(h.semiring(), n));
}

Matrix bellman_solve_jacobi(const Matrix& h, const Matrix& f, std::size_t max_steps,
                            double tolerance) {
    check_square(h, "bellman");
    check_same_semiring(h, f);
    if (h.cols() != f.rows())
        throw DimensionMismatch("bellman shapes: H is " + std::to_string(h.rows()) + "x" +
                                std::to_string(h.cols()) + ", F has " + std::to_string(f.rows()) +
                                " rows");
    if (max_steps == 0) max_steps = default_steps(h);
    Matrix s = f;
    for (std::size_t k = 1; k <= max_steps + 1; ++k) {
        Matrix next = mat_add(mat_mul(h, s), f);
        if (mat_close(next, s, tolerance)) return s;
        s = std::move(next);
    }
    throw NotStabilized("Jacobi iteration did not stabilize within " + std::to_string(max_steps) +
                            " steps",
                        max_steps);
}

Matrix bellman_solve_gauss_seidel(const Matrix& h, const Matrix& f, std::size_t max_steps,
                                  double tolerance) {
    check_square(h, "bellman");
    check_same_semiring(h, f);
    if (h.cols() != f.rows()) throw DimensionMismatch("bellman shape mismatch");
    if (max_steps == 0) max_steps = default_steps(h);
    const Semiring& sr = *h.semiring();
    const std::size_t n = h.rows(), m = f.cols();
    Matrix s = f;
    for (std::size_t sweep = 1; sweep <= max_steps + 1; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < m; ++c) {
                Value acc = sr.zero();
                for (std::size_t j = 0; j < n; ++j)
                    acc = sr.add(acc, sr.mul(h.at(i, j), s.at(j, c)));
                acc = sr.add(acc, f.at(i, c));
                const Value& cur = s.at(i, c);
                const bool same =
                    tolerance > 0.0 && acc.is_ext() && cur.is_ext() && acc.ext().finite() &&
                            cur.ext().finite()
                        ? std::abs(acc.ext().x - cur.ext().x) <= tolerance
                        : sr.equal(acc, cur);
                if (!same) {
                    s.set(i, c, std::move(acc));
                    changed = true;
                }
            }
        }
        if (!changed) return s;
    }
    throw NotStabilized("Gauss-Seidel iteration did not stabilize within " +
                            std::to_string(max_steps) + " sweeps",
                        max_steps);
}

namespace {

// Reachability over non-𝟘 entries for the irreducibility test.
std::vector<bool> reachable(const Matrix& h, bool transpose) {
    const Semiring& s = *h.semiring();
    const std::size_t n = h.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            const Value& w = transpose ? h.at(v, u) : h.at(u, v);
            if (!seen[v] && !s.equal(w, s.zero())) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace

EigenPair eigen_irreducible(const Matrix& h) {
    check_square(h, "eigenproblem");
    const SemiringPtr& sp = h.semiring();
    const std::string& id = sp->id();
    const bool maximizing = id == "rmax";
    if (!maximizing && id != "rmin")
        throw UnsupportedSemiring("eigen_irreducible supports rmax and rmin, not " + id);
    const std::size_t n = h.rows();
    if (n == 0) throw DimensionMismatch("empty matrix has no spectrum");

    for (bool t : {false, true})
        for (bool ok : reachable(h, t))
            if (!ok) throw NotIrreducible("the arc digraph is not strongly connected");

    // Karp's recursion from source node 0: best k-arc walk weights.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto finite = [](double d) { return !std::isnan(d); };
    std::vector<std::vector<double>> walk(n + 1, std::vector<double>(n, nan));
    walk[0][0] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t v = 0; v < n; ++v) {
            double best = nan;
            for (std::size_t u = 0; u < n; ++u) {
                const ExtReal& w = h.at(u, v).ext();
                if (!w.finite() || !finite(walk[k - 1][u])) continue;
                const double cand = walk[k - 1][u] + w.x;
                if (!finite(best) || (maximizing ? cand > best : cand < best)) best = cand;
            }
            walk[k][v] = best;
        }
    }

    double lambda = nan;
    for (std::size_t v = 0; v < n; ++v) {
        if (!finite(walk[n][v])) continue;
        double inner = nan;
        for (std::size_t k = 0; k < n; ++k) {
            if (!finite(walk[k][v])) continue;
            const double cand = (walk[n][v] - walk[k][v]) / static_cast<double>(n - k);
            if (!finite(inner) || (maximizing ? cand < inner : cand > inner)) inner = cand;
        }
        if (!finite(inner)) continue;
        if (!finite(lambda) || (maximizing ? inner > lambda : inner < lambda)) lambda = inner;
    }
    if (!finite(lambda)) throw NotIrreducible("the arc digraph has no cycles");

    // λ-normalized matrix has optimal cycle mean 𝟙, so its powers up to n-1
    // already cover every simple path; sum them without a stabilization probe
    // (float noise in λ must not turn into a spurious NotStabilized).
    const Semiring& s = *sp;
    Matrix norm(sp, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const ExtReal& w = h.at(i, j).ext();
            if (w.finite()) norm.set(i, j, Value::real(w.x - lambda));
        }
    Matrix star = Matrix::identity(sp, n);
    Matrix power = star;
    for (std::size_t k = 1; k < n; ++k) {
        power = mat_mul(power, norm);
        star = mat_add(star, power);
    }
    const Matrix plus = mat_mul(norm, star);

    // The best diagonal of norm⁺ marks a node on an optimal-mean cycle; its
    // closure column is an eigenvector. Ties keep the smallest node index.
    std::size_t critical = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (s.leq(plus.at(critical, critical), plus.at(j, j)) &&
            !s.equal(plus.at(critical, critical), plus.at(j, j)))
            critical = j;

    EigenPair out{Value::real(lambda), {}};
    out.vec.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.vec.push_back(star.at(i, critical));

    // Residual guard: exact on exact instances, 1e-9 relative otherwise.
    for (std::size_t i = 0; i < n; ++i) {
        const Value lhs = scalar_product(s, std::span(h.entries()).subspan(i * n, n), out.vec);
        const Value rhs = s.mul(out.lambda, out.vec[i]);
        if (s.equal(lhs, rhs)) continue;
        const ExtReal &a = lhs.ext(), &b = rhs.ext();
        if (a.finite() && b.finite()) {
            const double scale = std::max({1.0, std::abs(a.x), std::abs(b.x)});
            if (std::abs(a.x - b.x) <= 1e-9 * scale) continue;
        }
        throw Error("eigenpair residual check failed at row " + std::to_string(i + 1));
    }
    return out;
}

} // namespace idemkit

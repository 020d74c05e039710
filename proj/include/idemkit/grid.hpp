#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "idemkit/semiring.hpp"

namespace idemkit {

/// Finite set of strictly increasing real sample points.
struct RealGrid {
    std::vector<double> points;
    friend bool operator==(const RealGrid&, const RealGrid&) = default;
};

/// The additive group Z_n with elements 0..n-1.
struct CyclicGroup {
    std::size_t n = 0;
    friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

using Grid = std::variant<RealGrid, CyclicGroup>;

bool operator==(const Grid& a, const Grid& b);
std::size_t grid_size(const Grid& g);

/// Validates strict monotonicity of real grids; ValidationError otherwise.
void validate_grid(const Grid& g);

/// A grid-sampled A-valued function: one semiring value per domain point.
class GridFunction {
public:
    GridFunction(SemiringPtr semiring, Grid grid, std::vector<Value> values);

    const SemiringPtr& semiring() const { return semiring_; }
    const Grid& grid() const { return grid_; }
    const std::vector<Value>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Value& at(std::size_t i) const { return values_[i]; }

    /// Constant function over a grid.
    static GridFunction constant(SemiringPtr semiring, Grid grid, const Value& v);

    /// Same domain and a value list of matching length, new values.
    GridFunction with_values(std::vector<Value> values) const;

private:
    SemiringPtr semiring_;
    Grid grid_;
    std::vector<Value> values_;
};

/// An idempotent measure is determined by its density: m_φ(B) = ⨁_{x∈B} φ(x).
struct AMeasure {
    GridFunction density;
};

/// Dual sample points ξ₁..ξ_m for the Legendre transform.
struct DualGrid {
    std::vector<double> points;
};

/// An A-valued kernel K(x, y) on X × Y, row-major over x then y.
class Kernel {
public:
    Kernel(SemiringPtr semiring, Grid xgrid, Grid ygrid, std::vector<Value> values);

    const SemiringPtr& semiring() const { return semiring_; }
    const Grid& xgrid() const { return xgrid_; }
    const Grid& ygrid() const { return ygrid_; }
    std::size_t xsize() const { return grid_size(xgrid_); }
    std::size_t ysize() const { return grid_size(ygrid_); }
    const Value& at(std::size_t i, std::size_t j) const { return values_[i * ysize() + j]; }
    const std::vector<Value>& values() const { return values_; }

    /// Diagonal-𝟙 kernel on a square domain (the identity operator).
    static Kernel identity(SemiringPtr semiring, Grid grid);

private:
    SemiringPtr semiring_;
    Grid xgrid_, ygrid_;
    std::vector<Value> values_;
};

} // namespace idemkit

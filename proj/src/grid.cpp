#include "idemkit/grid.hpp"

#include <string>

namespace idemkit {

bool operator==(const Grid& a, const Grid& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ra = std::get_if<RealGrid>(&a)) return *ra == std::get<RealGrid>(b);
    return std::get<CyclicGroup>(a) == std::get<CyclicGroup>(b);
}

std::size_t grid_size(const Grid& g) {
    if (const auto* r = std::get_if<RealGrid>(&g)) return r->points.size();
    return std::get<CyclicGroup>(g).n;
}

void validate_grid(const Grid& g) {
    if (const auto* r = std::get_if<RealGrid>(&g)) {
        for (std::size_t i = 0; i + 1 < r->points.size(); ++i)
            if (!(r->points[i] < r->points[i + 1]))
                throw ValidationError("real grid points must be strictly increasing");
    }
}

GridFunction::GridFunction(SemiringPtr semiring, Grid grid, std::vector<Value> values)
    : semiring_(std::move(semiring)), grid_(std::move(grid)), values_(std::move(values)) {
    validate_grid(grid_);
    if (values_.size() != grid_size(grid_))
        throw ValidationError("grid function needs " + std::to_string(grid_size(grid_)) +
                              " values, got " + std::to_string(values_.size()));
    for (const Value& v : values_) semiring_->require(v);
}

GridFunction GridFunction::constant(SemiringPtr semiring, Grid grid, const Value& v) {
    std::vector<Value> vals(grid_size(grid), v);
    return GridFunction(std::move(semiring), std::move(grid), std::move(vals));
}

GridFunction GridFunction::with_values(std::vector<Value> values) const {
    return GridFunction(semiring_, grid_, std::move(values));
}

Kernel::Kernel(SemiringPtr semiring, Grid xgrid, Grid ygrid, std::vector<Value> values)
    : semiring_(std::move(semiring)), xgrid_(std::move(xgrid)), ygrid_(std::move(ygrid)),
      values_(std::move(values)) {
    validate_grid(xgrid_);
    validate_grid(ygrid_);
    if (values_.size() != grid_size(xgrid_) * grid_size(ygrid_))
        throw ValidationError("kernel needs |X|*|Y| values");
    for (const Value& v : values_) semiring_->require(v);
}

Kernel Kernel::identity(SemiringPtr semiring, Grid grid) {
    const std::size_t n = grid_size(grid);
    std::vector<Value> vals(n * n, semiring->zero());
    for (std::size_t i = 0; i < n; ++i) vals[i * n + i] = semiring->one();
    return Kernel(std::move(semiring), grid, grid, std::move(vals));
}

} // namespace idemkit

#include "idemkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "idemkit/matrix.hpp"

namespace idemkit {

namespace {

void check_shared_domain(const GridFunction& f, const GridFunction& g, const char* what) {
    if (f.semiring()->id() != g.semiring()->id())
        throw CarrierMismatch(std::string(what) + ": functions over different semirings");
    if (!(f.grid() == g.grid())) throw GridMismatch(std::string(what) + ": domains differ");
}

// Exact index lookup of a coordinate on a real grid; nullopt when off-grid.
std::optional<std::size_t> locate(const RealGrid& g, double x) {
    auto it = std::lower_bound(g.points.begin(), g.points.end(), x);
    if (it != g.points.end() && *it == x)
        return static_cast<std::size_t>(it - g.points.begin());
    return std::nullopt;
}

} // namespace

Value idempotent_integral(const GridFunction& f) {
    const Semiring& s = *f.semiring();
    if (!s.idempotent())
        throw UnsupportedSemiring("the idempotent integral needs an idempotent semiring");
    Value acc = s.zero(); // empty domains integrate to 𝟘
    for (const Value& v : f.values()) acc = s.add(acc, v);
    return acc;
}

Value measure_of(const AMeasure& m, std::span<const std::size_t> subset) {
    const Semiring& s = *m.density.semiring();
    Value acc = s.zero();
    for (std::size_t i : subset) {
        if (i >= m.density.size())
            throw IndexOutOfRange("measure subset index " + std::to_string(i) +
                                  " exceeds the domain size");
        acc = s.add(acc, m.density.at(i));
    }
    return acc;
}

Value integral_wrt_measure(const GridFunction& psi, const AMeasure& m) {
    check_shared_domain(psi, m.density, "integral against a measure");
    const Semiring& s = *psi.semiring();
    Value acc = s.zero();
    for (std::size_t i = 0; i < psi.size(); ++i)
        acc = s.add(acc, s.mul(psi.at(i), m.density.at(i)));
    return acc;
}

GridFunction idempotent_convolution(const GridFunction& f, const GridFunction& g) {
    check_shared_domain(f, g, "convolution");
    const Semiring& s = *f.semiring();
    const std::size_t n = f.size();

    if (const auto* cyc = std::get_if<CyclicGroup>(&f.grid())) {
        (void)cyc;
        std::vector<Value> out(n, s.zero());
        for (std::size_t z = 0; z < n; ++z) {
            Value acc = s.zero();
            for (std::size_t x = 0; x < n; ++x)
                acc = s.add(acc, s.mul(f.at(x), g.at((z + n - x) % n)));
            out[z] = std::move(acc);
        }
        return f.with_values(std::move(out));
    }

    // Real grids need a shared uniform spacing so that z - x can land back on
    // the grid; translates that fall off the grid are skipped (contribute 𝟘).
    const RealGrid& grid = std::get<RealGrid>(f.grid());
    if (n >= 2) {
        const double step = grid.points[1] - grid.points[0];
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (grid.points[i + 1] - grid.points[i] != step)
                throw UnsupportedDomain("convolution on a real grid needs uniform spacing");
    }
    std::vector<Value> out(n, s.zero());
    for (std::size_t zi = 0; zi < n; ++zi) {
        Value acc = s.zero();
        for (std::size_t xi = 0; xi < n; ++xi) {
            const auto yi = locate(grid, grid.points[zi] - grid.points[xi]);
            if (!yi) continue;
            acc = s.add(acc, s.mul(f.at(xi), g.at(*yi)));
        }
        out[zi] = std::move(acc);
    }
    return f.with_values(std::move(out));
}

GridFunction legendre_transform(const GridFunction& f, const DualGrid& xi) {
    const std::string& id = f.semiring()->id();
    if (id != "rmax" && id != "rmin")
        throw UnsupportedSemiring("the Legendre transform is defined over rmax (sup form) "
                                  "and rmin (inf form), not " + id);
    const auto* grid = std::get_if<RealGrid>(&f.grid());
    if (!grid) throw UnsupportedDomain("the Legendre transform needs a real grid");

    // The rmin convention inf_x(ξx + φ(x)) is the rmax path applied to the
    // negated samples: inf_x(ξx + φ) = -sup_x((-ξ)x + (-φ)).
    const bool min_form = id == "rmin";
    const Semiring& s = *f.semiring();
    RealGrid out_grid{xi.points};
    validate_grid(Grid{out_grid});
    std::vector<Value> out;
    out.reserve(xi.points.size());
    for (double slope : xi.points) {
        bool any = false;
        double best = 0.0;
        for (std::size_t i = 0; i < grid->points.size(); ++i) {
            const ExtReal& v = f.at(i).ext();
            if (!v.finite()) continue; // 𝟘 samples cannot attain the sup
            const double sx = min_form ? -slope : slope;
            const double vx = min_form ? -v.x : v.x;
            const double cand = sx * grid->points[i] + vx;
            if (!any || cand > best) {
                best = cand;
                any = true;
            }
        }
        if (!any) {
            out.push_back(s.zero()); // φ ≡ 𝟘 transforms to 𝟘
        } else {
            out.push_back(Value::real(min_form ? -best : best));
        }
    }
    return GridFunction(f.semiring(), Grid{std::move(out_grid)}, std::move(out));
}

Value idempotent_scalar_product(const GridFunction& f, const GridFunction& g) {
    check_shared_domain(f, g, "scalar product");
    return scalar_product(*f.semiring(), f.values(), g.values());
}

GridFunction integral_operator_apply(const Kernel& k, const GridFunction& f) {
    if (k.semiring()->id() != f.semiring()->id())
        throw CarrierMismatch("kernel and function use different semirings");
    if (!(k.ygrid() == f.grid()))
        throw GridMismatch("the function domain must equal the kernel's y-domain");
    const Semiring& s = *k.semiring();
    std::vector<Value> out;
    out.reserve(k.xsize());
    for (std::size_t i = 0; i < k.xsize(); ++i) {
        Value acc = s.zero();
        for (std::size_t j = 0; j < k.ysize(); ++j)
            acc = s.add(acc, s.mul(k.at(i, j), f.at(j)));
        out.push_back(std::move(acc));
    }
    return GridFunction(k.semiring(), k.xgrid(), std::move(out));
}

Kernel kernel_compose(const Kernel& k1, const Kernel& k2) {
    if (k1.semiring()->id() != k2.semiring()->id())
        throw CarrierMismatch("kernels use different semirings");
    if (!(k1.ygrid() == k2.xgrid()))
        throw GridMismatch("composition needs K1's y-domain to equal K2's x-domain");
    const Semiring& s = *k1.semiring();
    std::vector<Value> out;
    out.reserve(k1.xsize() * k2.ysize());
    for (std::size_t i = 0; i < k1.xsize(); ++i)
        for (std::size_t j = 0; j < k2.ysize(); ++j) {
            Value acc = s.zero();
            for (std::size_t y = 0; y < k1.ysize(); ++y)
                acc = s.add(acc, s.mul(k1.at(i, y), k2.at(y, j)));
            out.push_back(std::move(acc));
        }
    return Kernel(k1.semiring(), k1.xgrid(), k2.ygrid(), std::move(out));
}

} // namespace idemkit

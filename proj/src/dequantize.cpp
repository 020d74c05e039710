#include "idemkit/dequantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "idemkit/analysis.hpp"

namespace idemkit {

ExtReal dequantize_value(double u, double h) {
    if (!(h > 0.0)) throw NonPositiveH("deformation parameter must be positive");
    if (u < 0.0) throw NegativeInput("dequantization is defined on nonnegative inputs");
    if (u == 0.0) return ExtReal::neg_inf();
    return ExtReal::of(h * std::log(u));
}

double deformed_add_max(double w1, double w2, double h) {
    if (!(h > 0.0)) throw NonPositiveH("deformation parameter must be positive");
    const double m = std::max(w1, w2);
    const double d = std::abs(w1 - w2);
    return m + h * std::log1p(std::exp(-d / h));
}

double deformed_add_min(double w1, double w2, double h) {
    return -deformed_add_max(-w1, -w2, h);
}

ExtReal deformed_add_max(const ExtReal& w1, const ExtReal& w2, double h) {
    if (w1.neg()) return w2;
    if (w2.neg()) return w1;
    if (!w1.finite() || !w2.finite())
        throw CarrierMismatch("deformed addition is defined on R ∪ {-inf}");
    return ExtReal::of(deformed_add_max(w1.x, w2.x, h));
}

double second_dequantize(double w, double h) {
    if (!(h > 0.0)) throw NonPositiveH("deformation parameter must be positive");
    if (w >= 0.0) throw NonNegativeInput("second dequantization needs a negative input");
    return h * std::log(-w);
}

namespace {

// Discrete slopes at the ends of the sampled Hamiltonian bound the velocity
// range its Legendre dual covers; outside it the true Lagrangian is +∞.
struct SlopeRange {
    double lo, hi;
};

SlopeRange slope_range(const SampledHamiltonian& sh) {
    const std::size_t n = sh.pgrid.points.size();
    const auto slope = [&](std::size_t i) {
        return (sh.values[i + 1] - sh.values[i]) / (sh.pgrid.points[i + 1] - sh.pgrid.points[i]);
    };
    return {slope(0), slope(n - 2)};
}

void check_convex(const SampledHamiltonian& sh) {
    const std::size_t n = sh.pgrid.points.size();
    if (n < 2) throw ValidationError("a sampled Hamiltonian needs at least two samples");
    if (sh.values.size() != n)
        throw ValidationError("sampled Hamiltonian value count does not match its grid");
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const double s0 =
            (sh.values[i + 1] - sh.values[i]) / (sh.pgrid.points[i + 1] - sh.pgrid.points[i]);
        const double s1 = (sh.values[i + 2] - sh.values[i + 1]) /
                          (sh.pgrid.points[i + 2] - sh.pgrid.points[i + 1]);
        if (s1 < s0)
            throw NonConvexHamiltonian("sampled Hamiltonian has a decreasing slope at index " +
                                       std::to_string(i + 1));
    }
}

} // namespace

GridFunction hopf_lax_evolve(const CauchyProblem& p, const RealGrid& xgrid) {
    const GridFunction& s0 = p.s0;
    if (s0.semiring()->id() != "rmin")
        throw UnsupportedSemiring("Hopf–Lax evolves rmin-valued initial data");
    const auto* ygrid = std::get_if<RealGrid>(&s0.grid());
    if (!ygrid) throw UnsupportedDomain("Hopf–Lax needs initial data on a real grid");
    validate_grid(Grid{xgrid});
    if (p.t < 0.0) throw ValidationError("evolution time must be nonnegative");
    const SemiringPtr sr = s0.semiring();

    if (p.t < 1e-12) {
        // U₀ is the identity: resample S₀ onto xgrid (points must coincide).
        std::vector<Value> vals;
        vals.reserve(xgrid.points.size());
        for (double x : xgrid.points) {
            auto it = std::lower_bound(ygrid->points.begin(), ygrid->points.end(), x);
            if (it == ygrid->points.end() || *it != x)
                throw GridMismatch("t = 0 resampling needs xgrid points present in the "
                                   "initial grid");
            vals.push_back(s0.at(static_cast<std::size_t>(it - ygrid->points.begin())));
        }
        return GridFunction(sr, Grid{xgrid}, std::move(vals));
    }

    // Lagrangian per velocity; the sampled route goes through the Legendre
    // transform of the Hamiltonian samples evaluated at the velocities the
    // kernel actually needs.
    std::vector<Value> kernel_vals;
    kernel_vals.reserve(xgrid.points.size() * ygrid->points.size());
    if (std::holds_alternative<QuadraticHamiltonian>(p.hamiltonian)) {
        for (double x : xgrid.points)
            for (double y : ygrid->points) {
                const double v = (x - y) / p.t;
                kernel_vals.push_back(Value::real(p.t * (v * v / 2.0)));
            }
    } else {
        const auto& sh = std::get<SampledHamiltonian>(p.hamiltonian);
        check_convex(sh);
        const SlopeRange range = slope_range(sh);

        // Collect the distinct velocities, transform once, then look up.
        std::vector<double> vels;
        vels.reserve(xgrid.points.size() * ygrid->points.size());
        for (double x : xgrid.points)
            for (double y : ygrid->points) vels.push_back((x - y) / p.t);
        std::sort(vels.begin(), vels.end());
        vels.erase(std::unique(vels.begin(), vels.end()), vels.end());

        // L(v) = sup_p(pv - H(p)): the rmax Legendre transform of -H.
        std::vector<Value> neg_h;
        neg_h.reserve(sh.values.size());
        for (double hv : sh.values) neg_h.push_back(Value::real(-hv));
        const GridFunction lagrangian = legendre_transform(
            GridFunction(make_semiring("rmax"), Grid{sh.pgrid}, std::move(neg_h)),
            DualGrid{vels});

        for (double x : xgrid.points)
            for (double y : ygrid->points) {
                const double v = (x - y) / p.t;
                if (v < range.lo || v > range.hi) {
                    kernel_vals.push_back(Value::pos_inf()); // outside the covered range
                    continue;
                }
                const std::size_t idx = static_cast<std::size_t>(
                    std::lower_bound(vels.begin(), vels.end(), v) - vels.begin());
                kernel_vals.push_back(Value::real(p.t * lagrangian.at(idx).ext().x));
            }
    }
    const Kernel kt(sr, Grid{xgrid}, s0.grid(), std::move(kernel_vals));
    return integral_operator_apply(kt, s0);
}

double heat_solution_eval(const HeatSolutionSpec& spec, double x, double t) {
    if (!(spec.h > 0.0)) throw NonPositiveH("deformation parameter must be positive");
    if (t < 0.0) throw ValidationError("heat solutions are evaluated at t >= 0");
    double u = 0.0;
    for (const HeatComponent& c : spec.components) {
        if (!(c.amplitude > 0.0) || !(c.variance > 0.0))
            throw ValidationError("heat components need positive amplitude and variance");
        const double tau = c.variance + spec.h * t;
        const double dx = x - c.center;
        u += c.amplitude / std::sqrt(tau) * std::exp(-dx * dx / (2.0 * tau));
    }
    return u;
}

double burgers_residual(const SpaceTimeField& field, double h) {
    const std::size_t nx = field.x.size(), nt = field.t.size();
    if (nx < 3 || nt < 3)
        throw GridTooSmall("the residual stencil needs at least 3 points per direction");
    if (field.w.size() != nx)
        throw ValidationError("field needs one row of w per x sample");
    for (const auto& row : field.w)
        if (row.size() != nt) throw ValidationError("field rows must match the t sample count");
    const double dx = field.x[1] - field.x[0];
    const double dt = field.t[1] - field.t[0];
    for (std::size_t i = 0; i + 1 < nx; ++i)
        if (std::abs((field.x[i + 1] - field.x[i]) - dx) > 1e-12 * std::max(1.0, std::abs(dx)))
            throw ValidationError("x grid must be uniform");
    for (std::size_t j = 0; j + 1 < nt; ++j)
        if (std::abs((field.t[j + 1] - field.t[j]) - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
            throw ValidationError("t grid must be uniform");

    // Central differences at interior nodes; the boundary layers (including
    // the first time layer) stay out of the max.
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < nx; ++i)
        for (std::size_t j = 1; j + 1 < nt; ++j) {
            const double wt = (field.w[i][j + 1] - field.w[i][j - 1]) / (2.0 * dt);
            const double wx = (field.w[i + 1][j] - field.w[i - 1][j]) / (2.0 * dx);
            const double wxx =
                (field.w[i + 1][j] - 2.0 * field.w[i][j] + field.w[i - 1][j]) / (dx * dx);
            worst = std::max(worst, std::abs(wt + 0.5 * wx * wx - 0.5 * h * wxx));
        }
    return worst;
}

} // namespace idemkit

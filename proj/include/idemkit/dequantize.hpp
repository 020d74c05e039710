#pragma once

#include <variant>
#include <vector>

#include "idemkit/grid.hpp"

namespace idemkit {

/// D_h(u) = h·ln u mapping (ℝ₊, +, ·) onto the deformed operations;
/// D_h(0) = 𝟘 = −∞ and D_h(1) = 𝟙 = 0. NegativeInput for u < 0.
ExtReal dequantize_value(double u, double h);

/// w₁ ⊕_h w₂ = h·ln(e^{w₁/h} + e^{w₂/h}) for finite inputs, evaluated in the
/// max-factored stable form max + h·log1p(e^{−|w₁−w₂|/h}).
double deformed_add_max(double w1, double w2, double h);

/// The min-form deformation −h·ln(e^{−w₁/h} + e^{−w₂/h}) arising from
/// u ↦ −h·ln u; tends to min{w₁, w₂} as h → 0.
double deformed_add_min(double w1, double w2, double h);

/// Token-aware ⊕_h: 𝟘 = −∞ is neutral.
ExtReal deformed_add_max(const ExtReal& w1, const ExtReal& w2, double h);

/// Second dequantization w ↦ v = h·ln(−w) on negative inputs, carrying min
/// on the w-side to the deformed addition on the v-side.
double second_dequantize(double w, double h);

/// H(p) = p²/2.
struct QuadraticHamiltonian {};

/// Convex samples of H over a p-grid; the Lagrangian is obtained as the
/// Legendre transform L(v) = sup_p(pv − H(p)).
struct SampledHamiltonian {
    RealGrid pgrid;
    std::vector<double> values;
};

using Hamiltonian = std::variant<QuadraticHamiltonian, SampledHamiltonian>;

/// Cauchy data for ∂S/∂t + H(∂S/∂x) = 0: initial S₀ sampled over rmin
/// (finite or +∞ values), the Hamiltonian, and the evolution time.
struct CauchyProblem {
    GridFunction s0;
    Hamiltonian hamiltonian;
    double t = 0.0;
};

/// The resolving operator U_t as an ℝ_min-linear integral operator:
/// S(x,t) = min_y [S₀(y) + t·L((x−y)/t)], realized as a kernel application.
/// t below 1e-12 returns S₀ resampled onto xgrid.
GridFunction hopf_lax_evolve(const CauchyProblem& p, const RealGrid& xgrid);

/// One Gaussian component of an exact heat-equation solution.
struct HeatComponent {
    double amplitude = 1.0; // c > 0
    double center = 0.0;    // μ
    double variance = 1.0;  // σ² > 0
};

/// Mixture Σ cᵢ·(σᵢ²+ht)^{−1/2}·exp(−(x−μᵢ)²/(2(σᵢ²+ht))), each term an
/// exact solution of ∂u/∂t = (h/2)∂²u/∂x².
struct HeatSolutionSpec {
    std::vector<HeatComponent> components;
    double h = 1.0;
};

double heat_solution_eval(const HeatSolutionSpec& spec, double x, double t);

/// Samples of w over a uniform space-time grid; w[i][j] = w(x[i], t[j]).
struct SpaceTimeField {
    std::vector<double> x;
    std::vector<double> t;
    std::vector<std::vector<double>> w;
};

/// Max interior-node residual of ∂w/∂t + ½(∂w/∂x)² − (h/2)∂²w/∂x² under
/// second-order central differences; boundary layers are excluded.
double burgers_residual(const SpaceTimeField& field, double h);

} // namespace idemkit

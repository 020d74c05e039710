#pragma once

#include <span>

#include "idemkit/grid.hpp"

namespace idemkit {

/// ∫⊕ f = ⨁_x f(x), the sup over the grid in the natural order (an inf in
/// the numeric order for min-semirings). Empty domains give 𝟘.
Value idempotent_integral(const GridFunction& f);

/// m_φ(B) = ⨁_{x∈B} density(x) over a subset of domain indices.
Value measure_of(const AMeasure& m, std::span<const std::size_t> subset);

/// ∫⊕ ψ dm_φ = ⨁_x ψ(x)⊙φ(x).
Value integral_wrt_measure(const GridFunction& psi, const AMeasure& m);

/// (f ⊛ g)(z) = ⨁_x f(x)⊙g(z − x). Defined on a shared CyclicGroup, or on a
/// shared uniformly spaced real grid where translates that fall off the grid
/// are skipped (contribute 𝟘).
GridFunction idempotent_convolution(const GridFunction& f, const GridFunction& g);

/// φ̃(ξ) = ⨁_x (ξ·x ⊙ φ(x)). Over rmax this is sup_x(ξx + φ(x)), the
/// Legendre transform; over rmin the dual convention inf_x(ξx + φ(x)) is
/// realized by negating through the rmax path.
GridFunction legendre_transform(const GridFunction& f, const DualGrid& xi);

/// (f, g) = ⨁_x f(x)⊙g(x).
Value idempotent_scalar_product(const GridFunction& f, const GridFunction& g);

/// (Kf)(x) = ⨁_y K(x,y)⊙f(y).
GridFunction integral_operator_apply(const Kernel& k, const GridFunction& f);

/// (K1∘K2)(x,z) = ⨁_y K1(x,y)⊙K2(y,z), so that applying the composite equals
/// composing the applications.
Kernel kernel_compose(const Kernel& k1, const Kernel& k2);

} // namespace idemkit

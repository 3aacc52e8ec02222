#pragma once

#include "sta/fields/multivector_field.hpp"

namespace sta::fields {

// Field invariants as grade projections of per-node products. No 1/8pi
// normalisation is applied: for E = (1,0,0), B = 0 both densities are 1.
// Each projected coefficient is a correctly rounded sum of its product
// terms, so sign flips and blade permutations of F are reproduced exactly.

/// <F F>_0 = E^2 - B^2.
ScalarGrid lagrangian_density(const MultivectorField& F);
/// <F F^dagger>_0 = E^2 + B^2.
ScalarGrid hamiltonian_density(const MultivectorField& F);
/// Coefficient of i in <F F>_4, equal to 2 E.B.
ScalarGrid pseudoscalar_invariant(const MultivectorField& F);
/// S = (c / 8 pi) <F F^dagger>_2 read on s_k = g_k g0; equals (c/4pi) E x B.
VectorGrid poynting(const MultivectorField& F, double c = 1.0);

/// Grade-k part of a b with correctly rounded coefficients.
MultivectorD graded_product(const MultivectorD& a, const MultivectorD& b, int k);

}  // namespace sta::fields

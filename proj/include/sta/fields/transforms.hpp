#pragma once

#include "sta/fields/multivector_field.hpp"

namespace sta::fields {

/// F -> F e^{-i alpha}. At alpha = pi/2 the (E, B) reading becomes (B, -E).
MultivectorField duality_rotate(const MultivectorField& F, double alpha);

/// Discrete Euclidean duality (E, B) -> (B, E), applied to the fields only.
FieldState euclidean_duality_swap(const FieldState& s);

/// Boost rotor R = cosh(beta/2) - sinh(beta/2) g_axis g0, axis in {1,2,3}.
MultivectorD boost_rotor(double rapidity, int axis);

/// F -> R F reverse(R) with the boost rotor above.
MultivectorField rotor_boost(const MultivectorField& F, double rapidity, int axis);

/// Grade-1 part of T(a) = -1/2 F a F per node. a must be a grade-1 element
/// of the field's algebra.
MultivectorField energy_momentum(const MultivectorField& F, const MultivectorD& a);

}  // namespace sta::fields

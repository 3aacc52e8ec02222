#include "sta/fields/transforms.hpp"

#include <cmath>
#include <string>

namespace sta::fields {

MultivectorField duality_rotate(const MultivectorField& F, double alpha) {
    return F * duality_rotor(F.signature, alpha);
}

FieldState euclidean_duality_swap(const FieldState& s) {
    FieldState out = s;
    std::swap(out.E, out.B);
    return out;
}

MultivectorD boost_rotor(double rapidity, int axis) {
    if (axis < 1 || axis > 3) throw AlgebraError("boost axis must be 1, 2 or 3, got " + std::to_string(axis));
    const auto sig = Signature::minkowski();
    return MultivectorD::scalar(sig, std::cosh(rapidity / 2)) - relative_basis<double>(sig, axis) * std::sinh(rapidity / 2);
}

MultivectorField rotor_boost(const MultivectorField& F, double rapidity, int axis) {
    if (!F.signature.is_minkowski()) throw AlgebraError("rotor_boost requires Cl(1,3), got " + F.signature.name());
    const auto R = boost_rotor(rapidity, axis);
    return R * F * reverse(R);
}

MultivectorField energy_momentum(const MultivectorField& F, const MultivectorD& a) {
    if (a.signature() != F.signature) throw AlgebraError("energy_momentum: direction vector is in a different algebra");
    if (grades_present(a) & ~2U) throw AlgebraError("energy_momentum needs a grade-1 direction vector");
    MultivectorField out(F.grid, F.signature);
    for (std::size_t n = 0; n < F.cells.size(); ++n) out.cells[n] = grade(F.cells[n] * a * F.cells[n], 1) * -0.5;
    return out;
}

}  // namespace sta::fields

#pragma once

#include "sta/fields/grid.hpp"

namespace sta::fields {

/// Fields, potentials and sources on one grid. Vectors are relative
/// 3-vectors in the observer frame; A0 and the charge densities are scalars.
struct FieldState {
    explicit FieldState(GridSpec g);

    GridSpec grid;
    VectorGrid E, B;
    ScalarGrid A0;
    VectorGrid A;
    ScalarGrid rho_e, rho_m;
    VectorGrid j_e, j_m;
    double mass = 0.0;  // inverse Compton length
    double c = 1.0;
    double t = 0.0;

    /// Throws GridError if any grid has the wrong size or mass < 0.
    void validate() const;
};

/// Time derivatives of the evolving quantities of a FieldState.
struct FieldRates {
    explicit FieldRates(const GridSpec& g);

    VectorGrid dE, dB;
    ScalarGrid dA0;
    VectorGrid dA;
    ScalarGrid drho_e, drho_m;
};

/// Second-order central difference (next - prev) / (2 dt) of two snapshots
/// bracketing the time of interest.
FieldRates central_difference(const FieldState& prev, const FieldState& next, double dt);

}  // namespace sta::fields

#pragma once

#include "sta/fields/state.hpp"

#include <array>

namespace sta::fields {

enum class LaplacianSymbol {
    Continuum,     // -|k|^2, spectrally exact for band-limited data
    CentralSquare  // -sum_a sin^2(k_a h) / h^2, the symbol of div(grad) with central differences
};

/// Solves lap(phi) = rhs - mean(rhs) on the periodic grid with FFTW. The
/// zero mode of phi is set to 0; modes where the symbol vanishes (the
/// central-square checkerboard modes) are dropped.
ScalarGrid solve_poisson(const GridSpec& g, const ScalarGrid& rhs, LaplacianSymbol symbol);

/// Gaussian blob of total charge q and standard deviation `width`, centred
/// at `centre` with periodic minimum-image distance. Throws GridError when
/// width < 3h. When neutralise is set the grid mean is subtracted, which a
/// periodic Poisson problem needs.
ScalarGrid gaussian_blob(const GridSpec& g, double q, double width, const std::array<double, 3>& centre,
                         bool neutralise);

/// Static electric field of a neutralised Gaussian charge: rho_e from
/// gaussian_blob and E = -grad(phi) with lap(phi) = -4 pi rho_e.
FieldState coulomb_state(const GridSpec& g, double q, double width, LaplacianSymbol symbol);

}  // namespace sta::fields

#pragma once

#include "sta/fields/state.hpp"
#include "sta/simulator/config.hpp"

namespace sta::sim {

/// Wave vector 2 pi (mode_a / L_a) of a plane wave on the grid.
std::array<double, 3> wave_vector(const fields::GridSpec& g, const PlaneWave& wave);

/// Continuum Proca frequency c sqrt(k^2 + m^2).
double proca_frequency(double k, double mass, double c);

/// Plane wave at t = 0 with theta = k.x - w t and Lorenz-gauge potentials:
///   A  = (a_T p + a_L k^) cos theta,   A0 = (c a_L |k| / w) cos theta,
///   E  = -(c m^2 a_L / w) sin theta k^ - (w / c) a_T p sin theta,
///   B  = -a_T (k x p) sin theta.
/// Both modes obey w = c sqrt(k^2 + m^2); a_T = 0 and m = 0 together give a
/// pure gauge mode.
fields::FieldState plane_wave_state(const fields::GridSpec& g, const PlaneWave& wave, double mass, double c);

/// Builds the configured initial state; snapshot files bring their own grid,
/// mass and c. Sources sit at the box centre.
fields::FieldState initial_state(const SimConfig& cfg);

}  // namespace sta::sim

#pragma once

#include "sta/fields/state.hpp"

#include <stdexcept>

namespace sta::sim {

/// Non-finite values or an invalid step; the message names the step.
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Staggered leapfrog for the Maxwell-Proca-monopole system in Lorenz gauge.
/// B and A live at integer steps, E and A0 half a step earlier:
///
///   E^{n+1/2}  = E^{n-1/2}  + dt (c curl B^n + c m^2 A^n - 4 pi j_e)
///   A0^{n+1/2} = A0^{n-1/2} - c dt div A^n
///   B^{n+1}    = B^n        - dt (c curl E^{n+1/2} + 4 pi j_m)
///   A^{n+1}    = A^n        - c dt (E^{n+1/2} + grad A0^{n+1/2})
///
/// Sources are held fixed. Gauss-law residuals are monitored, never projected.
class Leapfrog {
public:
    /// `initial` holds every field at its own time t. E and A0 are moved back
    /// half a step with the same rates the update uses.
    Leapfrog(const fields::FieldState& initial, double dt);

    void step();
    void run(long steps);

    /// All fields at the current integer time; E and A0 are the mean of the
    /// neighbouring half steps.
    fields::FieldState synchronized() const;

    /// Raw state: E and A0 at time() - dt/2.
    const fields::FieldState& staggered() const noexcept { return s_; }

    double time() const noexcept { return s_.t; }
    double dt() const noexcept { return dt_; }
    long steps_taken() const noexcept { return steps_; }

private:
    /// out += scale * dE/dt and a0 += scale * dA0/dt from B, A at the current step.
    void add_electric_rate(fields::VectorGrid& e, fields::ScalarGrid& a0, double scale) const;

    fields::FieldState s_;
    double dt_;
    long steps_ = 0;
};

}  // namespace sta::sim

#pragma once

#include "sta/fields/gauge.hpp"
#include "sta/fields/norms.hpp"
#include "sta/simulator/leapfrog.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace sta::sim {

/// Three synchronized states one step apart, centred on `step`.
struct SampleWindow {
    long step;
    double dt;
    const fields::FieldState& prev;
    const fields::FieldState& cur;
    const fields::FieldState& next;
};

/// Advances `lf` by `steps` and calls `on_sample` for every centre step that
/// is a positive multiple of `cadence` and has a successor within the run.
void run_sampled(Leapfrog& lf, long steps, long cadence, const std::function<void(const SampleWindow&)>& on_sample);

struct Sample {
    long step = 0;
    double t = 0.0;
    double lagrangian = 0.0;   // integral of <F F>_0
    double hamiltonian = 0.0;  // integral of <F F^dagger>_0
    fields::Norms gauss_electric;  // div E - 4 pi rho_e + m^2 A0
    fields::Norms gauss_magnetic;  // div B - 4 pi rho_m
    fields::Norms lorenz;          // c^-1 dA0/dt + div A, time derivative from the window
    fields::ConservationReport conservation;
};

Sample measure(const SampleWindow& w);

/// Header plus one row per sample; columns are named in the header.
void write_timeseries_csv(std::ostream& out, const std::vector<Sample>& samples);

/// Volume integral h^3 sum f, summed pairwise in a fixed order.
double integrate(const fields::GridSpec& g, const fields::ScalarGrid& f);

/// One row of the duality table: the integrals of L, H, the i-coefficient of
/// <F F>_4 and the Poynting vector before and after F -> F e^{-i pi/2}.
struct DualityRow {
    long step = 0;
    double t = 0.0;
    double lagrangian = 0.0, lagrangian_rotated = 0.0;
    double hamiltonian = 0.0, hamiltonian_rotated = 0.0;
    double pseudoscalar = 0.0, pseudoscalar_rotated = 0.0;
    std::array<double, 3> poynting{}, poynting_rotated{};
};

DualityRow duality_row(const fields::FieldState& s, long step = 0);

std::vector<DualityRow> duality_timeseries(const std::vector<fields::FieldState>& snapshots);

void write_duality_csv(std::ostream& out, const std::vector<DualityRow>& rows);

}  // namespace sta::sim

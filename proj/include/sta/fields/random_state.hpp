#pragma once

#include "sta/fields/gauge.hpp"
#include "sta/fields/state.hpp"

#include <cstdint>
#include <random>

namespace sta::fields {

/// Uniform double in [lo, hi) from the top 53 bits of one draw. Written out
/// so the sequence is identical on every standard library.
double uniform(std::mt19937_64& rng, double lo, double hi);

struct SmoothFieldOptions {
    int modes = 3;          // Fourier modes per component
    int max_wavenumber = 2; // integer wavenumbers per axis in [-max, max]
    double amplitude = 1.0;
    double max_frequency = 2.0;
    double mass = 0.5;
    double c = 1.0;
};

/// Sum of `modes` travelling cosines a cos(k.x + phase - w t) at t = 0, and
/// its exact time derivative.
struct SmoothScalar {
    ScalarGrid value, rate, second_rate;
};

SmoothScalar smooth_scalar(const GridSpec& g, std::mt19937_64& rng, const SmoothFieldOptions& opt);

/// Every field, potential and source filled with independent band-limited
/// data; the rates are the exact time derivatives. The state satisfies no
/// field equation, which is what the residual equivalence check wants.
struct RandomState {
    FieldState state;
    FieldRates rates;
};

RandomState random_smooth_state(const GridSpec& g, std::uint64_t seed, const SmoothFieldOptions& opt = {});

GaugeField random_gauge(const GridSpec& g, std::uint64_t seed, const SmoothFieldOptions& opt = {});

}  // namespace sta::fields

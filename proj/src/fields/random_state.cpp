#include "sta/fields/random_state.hpp"

#include <complex>
#include <numbers>

namespace sta::fields {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

SmoothScalar smooth_scalar(const GridSpec& g, std::mt19937_64& rng, const SmoothFieldOptions& opt) {
    SmoothScalar out{zeros(g), zeros(g), zeros(g)};
    const int span = 2 * opt.max_wavenumber + 1;
    for (int m = 0; m < opt.modes; ++m) {
        std::array<int, 3> wave{};
        for (auto& w : wave) w = static_cast<int>(uniform(rng, 0.0, span)) - opt.max_wavenumber;
        const double amp = uniform(rng, -opt.amplitude, opt.amplitude);
        const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const double omega = uniform(rng, -opt.max_frequency, opt.max_frequency);

        // e^{i k.x} factorises per axis.
        std::array<std::vector<std::complex<double>>, 3> axis;
        for (int a = 0; a < 3; ++a) {
            const int n = g.n(a);
            axis[a].resize(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                const double theta = 2.0 * std::numbers::pi * wave[a] * x / n;
                axis[a][static_cast<std::size_t>(x)] = std::polar(1.0, theta);
            }
        }
        const std::complex<double> base = std::polar(1.0, phase);
        for (int k = 0; k < g.nz(); ++k) {
            for (int j = 0; j < g.ny(); ++j) {
                const auto yz = base * axis[1][static_cast<std::size_t>(j)] * axis[2][static_cast<std::size_t>(k)];
                for (int i = 0; i < g.nx(); ++i) {
                    const auto z = yz * axis[0][static_cast<std::size_t>(i)];
                    const std::size_t n = g.index(i, j, k);
                    // a cos(theta - w t) at t = 0: value a cos, rate a w sin, second rate -a w^2 cos.
                    out.value[n] += amp * z.real();
                    out.rate[n] += amp * omega * z.imag();
                    out.second_rate[n] -= amp * omega * omega * z.real();
                }
            }
        }
    }
    return out;
}

RandomState random_smooth_state(const GridSpec& g, std::uint64_t seed, const SmoothFieldOptions& opt) {
    std::mt19937_64 rng(seed);
    RandomState out{FieldState(g), FieldRates(g)};
    auto& s = out.state;
    auto& r = out.rates;
    s.mass = opt.mass;
    s.c = opt.c;
    auto fill = [&](ScalarGrid& value, ScalarGrid* rate) {
        auto f = smooth_scalar(g, rng, opt);
        value = std::move(f.value);
        if (rate != nullptr) *rate = std::move(f.rate);
    };
    for (int a = 0; a < 3; ++a) fill(s.E[a], &r.dE[a]);
    for (int a = 0; a < 3; ++a) fill(s.B[a], &r.dB[a]);
    fill(s.A0, &r.dA0);
    for (int a = 0; a < 3; ++a) fill(s.A[a], &r.dA[a]);
    fill(s.rho_e, &r.drho_e);
    fill(s.rho_m, &r.drho_m);
    for (int a = 0; a < 3; ++a) fill(s.j_e[a], nullptr);
    for (int a = 0; a < 3; ++a) fill(s.j_m[a], nullptr);
    return out;
}

GaugeField random_gauge(const GridSpec& g, std::uint64_t seed, const SmoothFieldOptions& opt) {
    std::mt19937_64 rng(seed);
    auto f = smooth_scalar(g, rng, opt);
    GaugeField out(g);
    out.chi = std::move(f.value);
    out.chi_t = std::move(f.rate);
    out.chi_tt = std::move(f.second_rate);
    return out;
}

}  // namespace sta::fields

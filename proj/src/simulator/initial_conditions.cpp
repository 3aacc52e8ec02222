#include "sta/simulator/initial_conditions.hpp"

#include "sta/fields/derivatives.hpp"
#include "sta/fields/poisson.hpp"
#include "sta/fields/snapshot.hpp"

#include <cmath>
#include <numbers>

namespace sta::sim {

using fields::FieldState;
using fields::GridSpec;

namespace {

double width_or_default(const GridSpec& g, double width) { return width > 0 ? width : 4.0 * g.h(); }

std::array<double, 3> centre(const GridSpec& g) { return {g.length(0) / 2, g.length(1) / 2, g.length(2) / 2}; }

}  // namespace

std::array<double, 3> wave_vector(const GridSpec& g, const PlaneWave& wave) {
    std::array<double, 3> k{};
    for (int a = 0; a < 3; ++a) k[static_cast<std::size_t>(a)] = 2.0 * std::numbers::pi * wave.mode[static_cast<std::size_t>(a)] / g.length(a);
    return k;
}

double proca_frequency(double k, double mass, double c) { return c * std::sqrt(k * k + mass * mass); }

FieldState plane_wave_state(const GridSpec& g, const PlaneWave& wave, double mass, double c) {
    const auto k = wave_vector(g, wave);
    const double kk = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (kk == 0) throw ConfigError("plane wave needs a non-zero wave-mode");
    const std::array<double, 3> khat{k[0] / kk, k[1] / kk, k[2] / kk};

    auto p = wave.polarization;
    const double along = p[0] * khat[0] + p[1] * khat[1] + p[2] * khat[2];
    for (int a = 0; a < 3; ++a) p[static_cast<std::size_t>(a)] -= along * khat[static_cast<std::size_t>(a)];
    const double pn = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (pn < 1e-12) throw ConfigError("polarization is parallel to the wave vector");
    for (auto& v : p) v /= pn;
    const std::array<double, 3> kxp{k[1] * p[2] - k[2] * p[1], k[2] * p[0] - k[0] * p[2], k[0] * p[1] - k[1] * p[0]};

    const double w = proca_frequency(kk, mass, c);
    const double aT = wave.amplitude;
    const double aL = wave.longitudinal;

    FieldState s(g);
    s.mass = mass;
    s.c = c;
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        const auto x = g.position(n);
        const double th = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
        const double cs = std::cos(th);
        const double sn = std::sin(th);
        s.A0[n] = c * aL * kk / w * cs;
        for (std::size_t a = 0; a < 3; ++a) {
            s.A[a][n] = (aT * p[a] + aL * khat[a]) * cs;
            s.E[a][n] = -(c * mass * mass * aL / w) * sn * khat[a] - (w / c) * aT * p[a] * sn;
            s.B[a][n] = -aT * kxp[a] * sn;
        }
    }
    return s;
}

FieldState initial_state(const SimConfig& cfg) {
    if (const auto* snap = std::get_if<SnapshotFile>(&cfg.initial)) {
        if (snap->path.empty()) throw ConfigError("initial = snapshot needs 'snapshot = <file>'");
        try {
            return fields::read_snapshot(snap->path);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    const auto g = cfg.grid();
    if (const auto* wave = std::get_if<PlaneWave>(&cfg.initial)) return plane_wave_state(g, *wave, cfg.mass, cfg.c);

    FieldState s(g);
    try {
        if (const auto* mono = std::get_if<GaussianMonopole>(&cfg.initial)) {
            // Periodic box: the blob is neutralised and B = -grad psi with
            // div grad psi = -4 pi rho_m for the same central differences.
            s.rho_m = fields::gaussian_blob(g, mono->charge, width_or_default(g, mono->width), centre(g), true);
            auto rhs = s.rho_m;
            for (auto& v : rhs) v *= -4.0 * std::numbers::pi;
            const auto grad = fields::gradient(g, fields::solve_poisson(g, rhs, fields::LaplacianSymbol::CentralSquare));
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t n = 0; n < g.cell_count(); ++n) s.B[a][n] = -grad[a][n];
            }
        } else {
            const auto& q = std::get<GaussianCharge>(cfg.initial);
            s = fields::coulomb_state(g, q.charge, width_or_default(g, q.width), fields::LaplacianSymbol::CentralSquare);
        }
    } catch (const fields::GridError& e) {
        throw ConfigError(e.what());
    }
    s.mass = cfg.mass;
    s.c = cfg.c;
    return s;
}

}  // namespace sta::sim

#include "sta/fields/poisson.hpp"

#include "sta/fields/derivatives.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace sta::fields {

namespace {

// FFTW's planner is not thread safe.
std::mutex g_plan_mutex;

double wavenumber(int index, int n, double length) {
    const int m = index <= n / 2 ? index : index - n;
    return 2.0 * std::numbers::pi * m / length;
}

}  // namespace

ScalarGrid solve_poisson(const GridSpec& g, const ScalarGrid& rhs, LaplacianSymbol symbol) {
    if (rhs.size() != g.cell_count()) throw GridError("Poisson right-hand side has the wrong size");
    const int nx = g.nx();
    const int ny = g.ny();
    const int nz = g.nz();
    const int nxh = nx / 2 + 1;
    const std::size_t spectral = static_cast<std::size_t>(nz) * static_cast<std::size_t>(ny) * static_cast<std::size_t>(nxh);

    std::vector<double> real(rhs);
    std::unique_ptr<fftw_complex[], decltype(&fftw_free)> spectrum(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * spectral)), &fftw_free);
    fftw_plan forward;
    fftw_plan backward;
    {
        std::lock_guard lock(g_plan_mutex);
        // Row-major (z, y, x) matches GridSpec::index.
        forward = fftw_plan_dft_r2c_3d(nz, ny, nx, real.data(), spectrum.get(), FFTW_ESTIMATE);
        backward = fftw_plan_dft_c2r_3d(nz, ny, nx, spectrum.get(), real.data(), FFTW_ESTIMATE);
    }
    fftw_execute(forward);

    const double h = g.h();
    for (int k = 0; k < nz; ++k) {
        const double kz = wavenumber(k, nz, g.length(2));
        for (int j = 0; j < ny; ++j) {
            const double ky = wavenumber(j, ny, g.length(1));
            for (int i = 0; i < nxh; ++i) {
                const double kx = wavenumber(i, nx, g.length(0));
                double lap;
                if (symbol == LaplacianSymbol::Continuum) {
                    lap = -(kx * kx + ky * ky + kz * kz);
                } else {
                    const double sx = std::sin(kx * h);
                    const double sy = std::sin(ky * h);
                    const double sz = std::sin(kz * h);
                    lap = -(sx * sx + sy * sy + sz * sz) / (h * h);
                }
                auto& c = spectrum[(static_cast<std::size_t>(k) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(j)) *
                                   static_cast<std::size_t>(nxh) +
                               static_cast<std::size_t>(i)];
                if (std::abs(lap) < 1e-12 / (h * h)) {
                    c[0] = 0.0;
                    c[1] = 0.0;
                } else {
                    c[0] /= lap;
                    c[1] /= lap;
                }
            }
        }
    }
    fftw_execute(backward);
    {
        std::lock_guard lock(g_plan_mutex);
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
    const double norm = 1.0 / static_cast<double>(g.cell_count());
    for (auto& x : real) x *= norm;
    return real;
}

ScalarGrid gaussian_blob(const GridSpec& g, double q, double width, const std::array<double, 3>& centre,
                         bool neutralise) {
    if (width < 3.0 * g.h() * (1 - 1e-12)) {
        throw GridError("blob width " + std::to_string(width) + " is below 3h = " + std::to_string(3.0 * g.h()));
    }
    ScalarGrid out(g.cell_count());
    const double norm = q / (std::pow(2.0 * std::numbers::pi, 1.5) * width * width * width);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const auto x = g.position(n);
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            const double len = g.length(a);
            double d = x[static_cast<std::size_t>(a)] - centre[static_cast<std::size_t>(a)];
            d -= len * std::round(d / len);
            r2 += d * d;
        }
        out[n] = norm * std::exp(-r2 / (2.0 * width * width));
    }
    if (neutralise) {
        double sum = 0.0;
        for (double v : out) sum += v;
        const double mean = sum / static_cast<double>(out.size());
        for (auto& v : out) v -= mean;
    }
    return out;
}

FieldState coulomb_state(const GridSpec& g, double q, double width, LaplacianSymbol symbol) {
    FieldState s(g);
    const std::array<double, 3> centre{g.length(0) / 2, g.length(1) / 2, g.length(2) / 2};
    s.rho_e = gaussian_blob(g, q, width, centre, true);
    ScalarGrid rhs(s.rho_e);
    for (auto& v : rhs) v *= -4.0 * std::numbers::pi;
    const auto phi = solve_poisson(g, rhs, symbol);
    const auto grad = gradient(g, phi);
    for (int a = 0; a < 3; ++a) {
        for (std::size_t n = 0; n < g.cell_count(); ++n) s.E[a][n] = -grad[a][n];
    }
    return s;
}

}  // namespace sta::fields

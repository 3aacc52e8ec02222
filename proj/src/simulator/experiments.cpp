#include "sta/simulator/experiments.hpp"

#include "sta/algebra/multivector.hpp"
#include "sta/fields/densities.hpp"
#include "sta/fields/multivector_field.hpp"
#include "sta/fields/parallel.hpp"
#include "sta/fields/snapshot.hpp"
#include "sta/simulator/initial_conditions.hpp"
#include "sta/simulator/leapfrog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sta::sim {

using fields::format_double;
using fields::GridSpec;

namespace {

constexpr double kPi = std::numbers::pi;

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxy += (x[k] - mx) * (y[k] - my);
        sxx += (x[k] - mx) * (x[k] - mx);
    }
    return sxy / sxx;
}

}  // namespace

DispersionResult measure_dispersion(const DispersionRun& run) {
    if (run.cells < 8 || run.mode < 1 || run.box <= 0 || run.c <= 0 || run.mass < 0) {
        throw ExperimentError("dispersion run needs cells >= 8, mode >= 1 and positive box and c");
    }
    const double cells_per_wavelength = static_cast<double>(run.cells) / run.mode;
    if (cells_per_wavelength < 16) {
        throw ExperimentError("unresolved wavelength: " + format_double(cells_per_wavelength) +
                              " cells per wavelength, need at least 16");
    }
    if (run.periods < 5) throw ExperimentError("the phase fit needs at least 5 periods");
    if (run.courant <= 0 || run.courant > 0.5) throw ExperimentError("courant number must lie in (0, 0.5]");

    const GridSpec g(run.cells, 8, 8, run.box / run.cells);
    const PlaneWave wave{{run.mode, 0, 0}, {0, 1, 0}, 1.0, 0.0};
    const double k = 2 * kPi * run.mode / run.box;
    const double predicted = proca_frequency(k, run.mass, run.c);

    // Integer number of predicted periods, split into steps no longer than the CFL limit.
    const double window = run.periods * 2 * kPi / predicted;
    const long steps = static_cast<long>(std::ceil(window / (run.courant * g.h() / run.c)));
    const double dt = window / static_cast<double>(steps);
    if (run.mass * run.c * dt > 0.5) throw ExperimentError("mass term under-resolved by the time step");

    Leapfrog lf(plane_wave_state(g, wave, run.mass, run.c), dt);
    std::vector<std::complex<double>> phase_factor(static_cast<std::size_t>(run.cells));
    for (int i = 0; i < run.cells; ++i) phase_factor[static_cast<std::size_t>(i)] = std::polar(1.0, -k * i * g.h());

    auto amplitude = [&] {
        // A lives at integer steps, so the staggered state is already synchronized for it.
        const auto& Ay = lf.staggered().A[1];
        std::complex<double> a = 0;
        for (std::size_t n = 0; n < g.cell_count(); ++n) a += Ay[n] * phase_factor[static_cast<std::size_t>(g.coords(n)[0])];
        return a;
    };

    std::vector<double> t, phase;
    t.reserve(static_cast<std::size_t>(steps) + 1);
    phase.reserve(static_cast<std::size_t>(steps) + 1);
    double last = 0.0;
    for (long n = 0; n <= steps; ++n) {
        const double p = std::arg(amplitude());
        // The phase moves far less than pi per step, so the nearest branch is the right one.
        phase.push_back(phase.empty() ? p : phase.back() + std::remainder(p - last, 2 * kPi));
        last = p;
        t.push_back(lf.time());
        if (n < steps) lf.step();
    }
    // theta = k x - w t puts the amplitude at phase -w t; report the positive root.
    const double measured = std::abs(fit_slope(t, phase));
    return {k, measured, predicted, std::abs(measured - predicted) / predicted};
}

std::vector<DispersionResult> measure_dispersion(const std::vector<DispersionRun>& runs) {
    std::vector<DispersionResult> out(runs.size());
    std::vector<std::string> errors(runs.size());
    fields::parallel_for(runs.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            try {
                out[r] = measure_dispersion(runs[r]);
            } catch (const std::exception& e) {
                errors[r] = e.what();
            }
        }
    });
    for (const auto& e : errors) {
        if (!e.empty()) throw ExperimentError(e);
    }
    return out;
}

void write_dispersion_csv(std::ostream& out, const std::vector<DispersionResult>& results) {
    out << "k,omega_measured,omega_predicted,relative_error\n";
    for (const auto& r : results) {
        out << format_double(r.k) << ',' << format_double(r.omega_measured) << ',' << format_double(r.omega_predicted)
            << ',' << format_double(r.relative_error) << '\n';
    }
}

std::vector<std::complex<double>> slab_profile(const SlabSetup& setup) {
    if (setup.cells < 8 || setup.length <= 0 || setup.c <= 0 || setup.omega < 0) {
        throw ExperimentError("slab needs cells >= 8, positive length and c, and omega >= 0");
    }
    using cd = std::complex<double>;
    const double i2 = scalar_part(pseudoscalar<double>(setup.signature) * pseudoscalar<double>(setup.signature));
    const double h = setup.length / setup.cells;
    const double lambda = (setup.omega * setup.omega) / (setup.c * setup.c) / i2;
    const int n = setup.cells;  // unknowns E_1..E_n, E_0 = 1

    // Row j: E_{j-1} - (2 + lambda h^2) E_j + E_{j+1} = 0.
    std::vector<cd> lower(static_cast<std::size_t>(n), 1.0), diag(static_cast<std::size_t>(n), -(2.0 + lambda * h * h)),
        upper(static_cast<std::size_t>(n), 1.0), rhs(static_cast<std::size_t>(n), 0.0);
    rhs[0] = -1.0;
    if (lambda >= 0) {
        // Zero flux: ghost E_{n+1} = E_{n-1}.
        lower[static_cast<std::size_t>(n - 1)] = 2.0;
    } else {
        // Outgoing: ghost E_{n+1} = E_n e^{-i k_d h} with cos(k_d h) = 1 + lambda h^2 / 2.
        const double kd_h = std::acos(std::clamp(1.0 + lambda * h * h / 2.0, -1.0, 1.0));
        diag[static_cast<std::size_t>(n - 1)] += std::polar(1.0, -kd_h);
    }

    // Thomas algorithm.
    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
        const cd w = lower[j] / diag[j - 1];
        diag[j] -= w * upper[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    std::vector<cd> profile(static_cast<std::size_t>(n) + 1);
    profile[0] = 1.0;
    profile[static_cast<std::size_t>(n)] = rhs[static_cast<std::size_t>(n - 1)] / diag[static_cast<std::size_t>(n - 1)];
    for (std::size_t j = static_cast<std::size_t>(n - 1); j >= 1; --j) {
        profile[j] = (rhs[j - 1] - upper[j - 1] * profile[j + 1]) / diag[j - 1];
    }
    return profile;
}

EvanescenceReport euclidean_evanescence(const SlabSetup& setup) {
    const auto profile = slab_profile(setup);
    const double h = setup.length / setup.cells;
    EvanescenceReport rep;
    rep.omega = setup.omega;
    rep.pseudoscalar_square = scalar_part(pseudoscalar<double>(setup.signature) * pseudoscalar<double>(setup.signature));
    const bool evanescent = rep.pseudoscalar_square > 0;
    rep.kappa_expected = evanescent ? setup.omega / setup.c : 0.0;

    std::vector<double> x, logmag;
    for (int j = 0; j <= setup.cells / 2; ++j) {
        const double mag = std::abs(profile[static_cast<std::size_t>(j)]);
        if (evanescent && j > 0 && mag > std::abs(profile[static_cast<std::size_t>(j - 1)]) * (1 + 1e-12)) {
            throw ExperimentError("non-monotonic slab profile at x = " + format_double(j * h) + "; decay fit refused");
        }
        if (!(mag > 0)) throw ExperimentError("slab profile vanishes at x = " + format_double(j * h));
        x.push_back(j * h);
        logmag.push_back(std::log(mag));
    }
    rep.kappa_fit = -fit_slope(x, logmag);
    rep.relative_error = rep.kappa_expected > 0 ? std::abs(rep.kappa_fit - rep.kappa_expected) / rep.kappa_expected
                                                : std::abs(rep.kappa_fit);

    rep.far_distance = setup.omega > 0 ? 10.0 * setup.c / setup.omega : std::numeric_limits<double>::infinity();
    for (int j = 0; j <= setup.cells; ++j) {
        if (j * h < rep.far_distance) continue;
        ++rep.far_nodes;
        rep.transmitted = std::max(rep.transmitted, std::abs(profile[static_cast<std::size_t>(j)]));
    }
    if (rep.far_nodes == 0) rep.transmitted = std::numeric_limits<double>::quiet_NaN();
    return rep;
}

void write_evanescence_csv(std::ostream& out, const std::vector<EvanescenceReport>& reports) {
    out << "omega,pseudoscalar_square,kappa_fit,kappa_expected,relative_error,far_distance,far_nodes,transmitted\n";
    for (const auto& r : reports) {
        out << format_double(r.omega) << ',' << format_double(r.pseudoscalar_square) << ',' << format_double(r.kappa_fit)
            << ',' << format_double(r.kappa_expected) << ',' << format_double(r.relative_error) << ','
            << format_double(r.far_distance) << ',' << r.far_nodes << ',' << format_double(r.transmitted) << '\n';
    }
}

MonopoleReport monopole_gauss_check(const MonopoleSetup& setup) {
    const int N = setup.cells;
    const double h = setup.h;
    if (N < 16 || h <= 0) throw ExperimentError("monopole grid needs at least 16 nodes and h > 0");
    const double width = setup.width > 0 ? setup.width : 4.0 * h;
    const double centre = 0.5 * (N - 1) * h;  // node i sits at i h
    const int mid = N / 2;                    // boxes cover nodes [mid - m, mid + m - 1]
    if (N % 2 != 0) throw ExperimentError("monopole grid needs an even node count");
    if (setup.box_half_cells.empty()) throw ExperimentError("no measurement boxes given");
    for (int m : setup.box_half_cells) {
        if (m * h < 5 * width) {
            throw ExperimentError("measurement box half-width " + format_double(m * h) + " is closer than 5 widths (" +
                                  format_double(5 * width) + ") to the charge");
        }
        if (mid - m < 1 || mid + m > N - 1) throw ExperimentError("measurement box leaves the solution domain");
    }

    const auto n3 = static_cast<std::size_t>(N) * static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    auto idx = [N](int i, int j, int k) {
        return (static_cast<std::size_t>(k) * static_cast<std::size_t>(N) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(N) +
               static_cast<std::size_t>(i);
    };
    std::vector<double> rhs(n3, 0.0), psi(n3, 0.0);
    const double norm = setup.charge / (std::pow(2 * kPi, 1.5) * width * width * width);
    for (int k = 0; k < N; ++k) {
        for (int j = 0; j < N; ++j) {
            for (int i = 0; i < N; ++i) {
                const double dx = i * h - centre, dy = j * h - centre, dz = k * h - centre;
                const double rho = norm * std::exp(-(dx * dx + dy * dy + dz * dz) / (2 * width * width));
                rhs[idx(i, j, k)] = -4 * kPi * rho * h * h;  // lap psi h^2 = rhs
            }
        }
    }

    auto residual_norm = [&] {
        double r2 = 0, b2 = 0;
        for (int k = 1; k < N - 1; ++k) {
            for (int j = 1; j < N - 1; ++j) {
                for (int i = 1; i < N - 1; ++i) {
                    const auto n = idx(i, j, k);
                    const double lap = psi[n - 1] + psi[n + 1] + psi[idx(i, j - 1, k)] + psi[idx(i, j + 1, k)] +
                                       psi[idx(i, j, k - 1)] + psi[idx(i, j, k + 1)] - 6 * psi[n];
                    r2 += (lap - rhs[n]) * (lap - rhs[n]);
                    b2 += rhs[n] * rhs[n];
                }
            }
        }
        return b2 > 0 ? std::sqrt(r2 / b2) : std::sqrt(r2);
    };

    MonopoleReport rep;
    rep.charge = setup.charge;
    rep.width = width;
    const double omega = 2.0 / (1.0 + std::sin(kPi / (N - 1)));
    rep.residual = residual_norm();
    while (rep.residual > setup.tolerance) {
        if (rep.iterations >= setup.max_iterations) {
            throw ExperimentError("SOR did not converge: relative residual " + format_double(rep.residual) + " after " +
                                  std::to_string(rep.iterations) + " iterations");
        }
        for (int colour = 0; colour < 2; ++colour) {
            // Nodes of one colour only read the other colour, so slabs are independent.
            fields::parallel_for(static_cast<std::size_t>(N - 2), [&](std::size_t k0, std::size_t k1) {
                for (int k = static_cast<int>(k0) + 1; k < static_cast<int>(k1) + 1; ++k) {
                    for (int j = 1; j < N - 1; ++j) {
                        for (int i = 1 + (j + k + colour) % 2; i < N - 1; i += 2) {
                            const auto n = idx(i, j, k);
                            const double sum = psi[n - 1] + psi[n + 1] + psi[idx(i, j - 1, k)] + psi[idx(i, j + 1, k)] +
                                               psi[idx(i, j, k - 1)] + psi[idx(i, j, k + 1)];
                            psi[n] += omega * ((sum - rhs[n]) / 6.0 - psi[n]);
                        }
                    }
                }
            });
        }
        ++rep.iterations;
        if (rep.iterations % 10 == 0) rep.residual = residual_norm();
    }

    for (int m : setup.box_half_cells) {
        // Outward B.n = -(psi_out - psi_in) / h on each face, times the face area h^2.
        const int lo = mid - m, hi = mid + m - 1;
        std::vector<double> terms;
        for (int a = lo; a <= hi; ++a) {
            for (int b = lo; b <= hi; ++b) {
                terms.push_back(psi[idx(lo, a, b)] - psi[idx(lo - 1, a, b)]);
                terms.push_back(psi[idx(hi, a, b)] - psi[idx(hi + 1, a, b)]);
                terms.push_back(psi[idx(a, lo, b)] - psi[idx(a, lo - 1, b)]);
                terms.push_back(psi[idx(a, hi, b)] - psi[idx(a, hi + 1, b)]);
                terms.push_back(psi[idx(a, b, lo)] - psi[idx(a, b, lo - 1)]);
                terms.push_back(psi[idx(a, b, hi)] - psi[idx(a, b, hi + 1)]);
            }
        }
        const double flux = fields::pairwise_sum(terms) * h;
        rep.box_half_widths.push_back(m * h);
        rep.flux.push_back(flux);
        rep.ratio.push_back(setup.charge != 0 ? flux / (4 * kPi * setup.charge) : 0.0);
    }
    const auto [fmin, fmax] = std::minmax_element(rep.flux.begin(), rep.flux.end());
    const double scale = std::max(std::abs(*fmin), std::abs(*fmax));
    rep.box_difference = scale > 0 ? (*fmax - *fmin) / scale : 0.0;
    return rep;
}

void write_monopole_csv(std::ostream& out, const MonopoleReport& r) {
    out << "box_half_width,flux,flux_over_4pi_charge,charge,width,iterations,residual\n";
    for (std::size_t k = 0; k < r.flux.size(); ++k) {
        out << format_double(r.box_half_widths[k]) << ',' << format_double(r.flux[k]) << ',' << format_double(r.ratio[k])
            << ',' << format_double(r.charge) << ',' << format_double(r.width) << ',' << r.iterations << ','
            << format_double(r.residual) << '\n';
    }
}

double measure_group_speed(const PulseSetup& setup) {
    const GridSpec g(setup.cells, 8, 8, setup.box / setup.cells);
    if (setup.width < 3 * g.h()) throw ExperimentError("pulse width must be at least 3h");
    const double L = g.length(0);
    const double x0 = 0.25 * L;

    // Right-moving massless profile f(x - c t): A_y = f, E_y = B_z = f'.
    fields::FieldState s(g);
    s.c = setup.c;
    s.mass = setup.mass;
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        double d = g.position(n)[0] - x0;
        d -= L * std::round(d / L);
        const double f = std::exp(-d * d / (2 * setup.width * setup.width));
        const double fp = -d / (setup.width * setup.width) * f;
        s.A[1][n] = f;
        s.E[1][n] = fp;
        s.B[2][n] = fp;
    }

    auto centroid = [&](const fields::FieldState& st) {
        const auto H = fields::hamiltonian_density(fields::assemble_faraday(st));
        double cx = 0, sx = 0;
        for (std::size_t n = 0; n < g.cell_count(); ++n) {
            const double th = 2 * kPi * g.position(n)[0] / L;
            cx += H[n] * std::cos(th);
            sx += H[n] * std::sin(th);
        }
        return std::atan2(sx, cx) * L / (2 * kPi);
    };

    const double duration = setup.travel * L / setup.c;
    const long steps = static_cast<long>(std::ceil(duration / (0.5 * g.h() / setup.c)));
    Leapfrog lf(s, duration / static_cast<double>(steps));
    const double start = centroid(lf.synchronized());
    lf.run(steps);
    double moved = centroid(lf.synchronized()) - start;
    moved -= L * std::floor(moved / L);
    return moved / lf.time();
}

}  // namespace sta::sim

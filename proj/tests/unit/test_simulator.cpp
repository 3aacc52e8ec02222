#include "doctest.h"

#include "sta/fields/snapshot.hpp"
#include "sta/simulator/config.hpp"
#include "sta/simulator/experiments.hpp"
#include "sta/simulator/initial_conditions.hpp"
#include "sta/simulator/leapfrog.hpp"
#include "sta/simulator/timeseries.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using namespace sta;
using namespace sta::fields;
using namespace sta::sim;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_difference(const ScalarGrid& a, const ScalarGrid& b) {
    double m = 0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

std::vector<Sample> sampled_run(const FieldState& s, double dt, long steps, long cadence) {
    Leapfrog lf(s, dt);
    std::vector<Sample> out;
    run_sampled(lf, steps, cadence, [&](const SampleWindow& w) { out.push_back(measure(w)); });
    return out;
}

}  // namespace

TEST_CASE("config text overrides defaults and reports bad lines") {
    SimConfig cfg;
    apply_config(cfg,
                 "# massive wave\n"
                 "grid = 64, 8, 8\n"
                 "box = 2.0\n"
                 "mass = 1.5   # inverse length\n"
                 "steps = 40\n"
                 "initial = plane-wave\n"
                 "wave-mode = 2,0,0\n"
                 "longitudinal-amplitude = 0.5\n");
    CHECK(cfg.cells == std::array<int, 3>{64, 8, 8});
    CHECK(cfg.grid().h() == doctest::Approx(2.0 / 64));
    CHECK(cfg.mass == 1.5);
    CHECK(cfg.steps == 40);
    const auto& wave = std::get<PlaneWave>(cfg.initial);
    CHECK(wave.mode == std::array<int, 3>{2, 0, 0});
    CHECK(wave.longitudinal == 0.5);
    CHECK(cfg.time_step() == doctest::Approx(0.5 * 2.0 / 64));
    CHECK_NOTHROW(cfg.validate());

    SimConfig mono;
    apply_config(mono, "initial = gaussian-monopole\ncharge = 2\nwidth = 0.2\n");
    CHECK(std::get<GaussianMonopole>(mono.initial).charge == 2.0);

    SimConfig bad;
    CHECK_THROWS_WITH_AS(apply_config(bad, "grid = 16\ncolour = red\n", "run.cfg"), "run.cfg:2: unknown key 'colour'",
                         ConfigError);
    CHECK_THROWS_WITH_AS(apply_config(bad, "box = 1x\n"), "<memory>:1: not a number: '1x'", ConfigError);
    CHECK_THROWS_AS(apply_config(bad, "charge = 1\n"), ConfigError);
    CHECK_THROWS_AS(apply_config(bad, "steps = 1\nsteps = 2\n"), ConfigError);
    CHECK_THROWS_AS(apply_config(bad, "grid = 16,16\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/run.cfg"), ConfigError);

    SimConfig fast;
    fast.cells = {16, 16, 16};
    fast.dt = 0.6 / 16;
    CHECK_THROWS_AS(fast.validate(), ConfigError);
    fast.dt = 0.5 / 16;
    CHECK_NOTHROW(fast.validate());
    fast.mass = 20;
    CHECK_THROWS_AS(fast.validate(), ConfigError);
}

TEST_CASE("zero initial data without sources stays zero") {
    const auto g = GridSpec::cubic(8, 1.0);
    FieldState s(g);
    s.mass = 1.0;
    Leapfrog lf(s, 0.5 * g.h());
    lf.run(50);
    const auto out = lf.synchronized();
    for (int a = 0; a < 3; ++a) {
        CHECK(max_abs_difference(out.E[a], s.E[a]) == 0.0);
        CHECK(max_abs_difference(out.B[a], s.B[a]) == 0.0);
        CHECK(max_abs_difference(out.A[a], s.A[a]) == 0.0);
    }
    CHECK(lf.time() == doctest::Approx(50 * 0.5 * g.h()));
}

TEST_CASE("synchronized output reproduces the initial state") {
    const auto g = GridSpec(16, 8, 8, 1.0 / 16);
    const auto s = plane_wave_state(g, PlaneWave{{1, 0, 0}, {0, 1, 1}, 1.0, 0.5}, 2.0, 1.0);
    const auto back = Leapfrog(s, 0.01).synchronized();
    for (int a = 0; a < 3; ++a) CHECK(max_abs_difference(back.E[a], s.E[a]) < 1e-14);
    CHECK(max_abs_difference(back.A0, s.A0) < 1e-14);
}

TEST_CASE("plane-wave initial data satisfies the continuum equations") {
    // Check the closed form against a hand derivative at one point.
    const auto g = GridSpec(32, 8, 8, 1.0 / 32);
    const double m = 3.0, c = 2.0;
    const PlaneWave wave{{1, 0, 0}, {0, 0, 1}, 0.7, 0.4};
    const auto s = plane_wave_state(g, wave, m, c);
    const double k = 2 * kPi;
    const double w = c * std::sqrt(k * k + m * m);
    const std::size_t n = g.index(5, 0, 0);
    const double th = k * g.position(n)[0];
    // Lorenz: c^-1 dA0/dt + dAx/dx with dA/dt of cos(theta) = w sin(theta).
    const double dA0dt = c * 0.4 * k / w * w * std::sin(th);
    const double dAxdx = -0.4 * k * std::sin(th);
    CHECK(dA0dt / c + dAxdx == doctest::Approx(0.0).epsilon(1e-12));
    // E = -grad A0 - c^-1 dA/dt.
    CHECK(s.E[0][n] == doctest::Approx(c * 0.4 * k / w * k * std::sin(th) - 0.4 * w / c * std::sin(th)));
    CHECK(s.E[2][n] == doctest::Approx(-0.7 * w / c * std::sin(th)));
    CHECK(s.B[1][n] == doctest::Approx(0.7 * k * std::sin(th)));  // curl of A_z cos(kx) along y
    CHECK_THROWS_AS(plane_wave_state(g, PlaneWave{{1, 0, 0}, {1, 0, 0}, 1, 0}, 0, 1), ConfigError);
}

TEST_CASE("massless plane wave returns after one period") {
    std::array<double, 2> err{};
    for (int level = 0; level < 2; ++level) {
        const int n = 32 << level;
        const auto g = GridSpec(n, 8, 8, 1.0 / n);
        const auto s = plane_wave_state(g, PlaneWave{}, 0.0, 1.0);
        const double period = 1.0;
        const long steps = 2 * n;
        Leapfrog lf(s, period / static_cast<double>(steps));
        lf.run(steps);
        const auto out = lf.synchronized();
        err[level] = max_abs_difference(out.A[1], s.A[1]);
    }
    CHECK(err[0] < 0.1);
    CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("energy and constraints stay bounded over long runs") {
    const auto g = GridSpec(16, 8, 8, 1.0 / 16);
    // Massless: the leapfrog energy oscillates at O(dt^2) without drift.
    const auto light = sampled_run(plane_wave_state(g, PlaneWave{}, 0.0, 1.0), 0.5 * g.h(), 10000, 500);
    REQUIRE(light.size() == 19);
    const double h0 = light.front().hamiltonian;
    double spread = 0;
    for (const auto& s : light) spread = std::max(spread, std::abs(s.hamiltonian - h0) / h0);
    CHECK(spread < 1e-2);

    // Massive with a longitudinal part: the Gauss constraints are conserved by
    // the discrete scheme, so they sit at rounding level for the whole run.
    auto massive_state = plane_wave_state(g, PlaneWave{{1, 0, 0}, {0, 1, 0}, 1.0, 1.0}, 2 * kPi, 1.0);
    const auto heavy = sampled_run(massive_state, 0.5 * g.h(), 10000, 500);
    double gauss = 0, lorenz_first = heavy.front().lorenz.l2, lorenz_max = 0;
    for (const auto& s : heavy) {
        gauss = std::max({gauss, s.gauss_magnetic.linf, std::abs(s.gauss_electric.linf - heavy.front().gauss_electric.linf)});
        lorenz_max = std::max(lorenz_max, s.lorenz.l2);
    }
    CHECK(gauss < 1e-10);  // regression bound
    CHECK(lorenz_max < 2 * lorenz_first);
    CHECK(lorenz_first > 0.0);
}

TEST_CASE("conservation residual of a massive run is second order") {
    std::array<double, 2> res{};
    for (int level = 0; level < 2; ++level) {
        const int n = 16 << level;
        const auto g = GridSpec(n, 8, 8, 1.0 / n);
        const auto s = plane_wave_state(g, PlaneWave{{1, 0, 0}, {0, 1, 0}, 1.0, 1.0}, 2 * kPi, 1.0);
        const auto samples = sampled_run(s, 0.5 * g.h(), 200L << level, 20L << level);
        double worst = 0;
        for (const auto& sm : samples) {
            worst = std::max(worst, sm.conservation.electric.l2);
            CHECK(sm.conservation.magnetic.linf == 0.0);
        }
        res[level] = worst;
    }
    CHECK(res[0] / res[1] == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("sampling windows are centred on cadence multiples") {
    const auto g = GridSpec::cubic(8, 1.0);
    Leapfrog lf(plane_wave_state(g, PlaneWave{}, 0.0, 1.0), 0.05);
    std::vector<long> centres;
    run_sampled(lf, 10, 3, [&](const SampleWindow& w) {
        centres.push_back(w.step);
        CHECK(w.next.t - w.prev.t == doctest::Approx(0.1));
        CHECK(w.cur.t == doctest::Approx(0.05 * static_cast<double>(w.step)));
    });
    CHECK(centres == std::vector<long>{3, 6, 9});
    CHECK(lf.steps_taken() == 10);

    Leapfrog every(plane_wave_state(g, PlaneWave{}, 0.0, 1.0), 0.05);
    int count = 0;
    run_sampled(every, 5, 1, [&](const SampleWindow&) { ++count; });
    CHECK(count == 4);

    std::ostringstream csv;
    write_timeseries_csv(csv, {Sample{}});
    CHECK(csv.str().rfind("step,t,lagrangian,hamiltonian,", 0) == 0);
}

TEST_CASE("unstable steps are detected") {
    const auto g = GridSpec::cubic(8, 1.0);
    Leapfrog lf(plane_wave_state(g, PlaneWave{{1, 1, 0}, {0, 0, 1}, 1.0, 0.0}, 0.0, 1.0), 3.0 * g.h());
    CHECK_THROWS_AS(lf.run(5000), SimulationError);
    CHECK_THROWS_AS(Leapfrog(FieldState(g), 0.0), SimulationError);
}

TEST_CASE("initial conditions from config") {
    SimConfig cfg;
    cfg.cells = {32, 32, 32};
    cfg.initial = GaussianMonopole{1.0, 0.0};
    const auto mono = initial_state(cfg);
    double total = 0;
    for (double v : mono.rho_m) total += v;
    CHECK(std::abs(total) < 1e-9);
    // Static monopole: B is curl-free, so the run keeps it and div j_m = 0 exactly.
    const auto samples = sampled_run(mono, cfg.time_step(), 40, 10);
    REQUIRE(samples.size() == 3);
    for (const auto& s : samples) {
        CHECK(s.conservation.magnetic.linf == 0.0);
        CHECK(std::abs(s.gauss_magnetic.linf - samples.front().gauss_magnetic.linf) < 1e-12);
    }
    CHECK(samples.front().gauss_magnetic.linf < 1e-2 * 4 * kPi * *std::max_element(mono.rho_m.begin(), mono.rho_m.end()));

    cfg.initial = GaussianCharge{1.0, 0.05};
    CHECK_THROWS_AS(initial_state(cfg), ConfigError);  // below 3h

    const auto dir = std::filesystem::temp_directory_path() / "sta_sim_config_test";
    std::filesystem::create_directories(dir);
    auto wave = plane_wave_state(GridSpec(8, 9, 10, 0.1), PlaneWave{}, 0.3, 1.0);
    write_snapshot(dir / "start.csv", wave);
    {
        std::ofstream out(dir / "run.cfg");
        out << "initial = snapshot\nsnapshot = start.csv\nsteps = 3\n";
    }
    const auto loaded = load_config(dir / "run.cfg");
    const auto from_file = initial_state(loaded);
    CHECK(from_file.grid == wave.grid);
    CHECK(from_file.E == wave.E);
    CHECK(from_file.mass == 0.3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("dispersion fit") {
    const auto light = measure_dispersion(DispersionRun{.cells = 64, .mass = 0.0});
    CHECK(light.k == doctest::Approx(2 * kPi));
    CHECK(light.relative_error < 0.01);
    CHECK(light.omega_measured / light.k == doctest::Approx(1.0).epsilon(0.01));

    const auto heavy = measure_dispersion(DispersionRun{.cells = 64, .mass = 2 * kPi});
    CHECK(heavy.omega_predicted == doctest::Approx(std::sqrt(2.0) * 2 * kPi));
    CHECK(heavy.relative_error < 0.01);

    const auto sweep = measure_dispersion(std::vector<DispersionRun>{{.cells = 32, .mass = kPi}, {.cells = 64, .mass = kPi}});
    REQUIRE(sweep.size() == 2);
    CHECK(sweep[0].relative_error / sweep[1].relative_error == doctest::Approx(4.0).epsilon(0.2));

    CHECK_THROWS_AS(measure_dispersion(DispersionRun{.cells = 32, .mode = 3}), ExperimentError);
    CHECK_THROWS_AS(measure_dispersion(DispersionRun{.cells = 64, .periods = 2}), ExperimentError);

    std::ostringstream csv;
    write_dispersion_csv(csv, {light});
    CHECK(csv.str().rfind("k,omega_measured,omega_predicted,relative_error\n", 0) == 0);
}

TEST_CASE("driven slab decays in Euclidean signature and propagates in Minkowski") {
    const auto zero = euclidean_evanescence(SlabSetup{.omega = 0.0});
    CHECK(std::abs(zero.kappa_fit) < 1e-12);
    CHECK(zero.far_nodes == 0);

    const auto base = euclidean_evanescence(SlabSetup{.cells = 128, .length = 2.0, .omega = 2 * kPi});
    CHECK(base.pseudoscalar_square == 1.0);
    CHECK(base.kappa_expected == doctest::Approx(2 * kPi));
    CHECK(base.relative_error < 0.02);
    CHECK(base.far_nodes > 0);
    CHECK(base.transmitted < 1e-4);

    const auto doubled = euclidean_evanescence(SlabSetup{.cells = 256, .length = 2.0, .omega = 4 * kPi});
    CHECK(doubled.kappa_fit / base.kappa_fit == doctest::Approx(2.0).epsilon(0.02));

    const auto mink = euclidean_evanescence(SlabSetup{.signature = Signature::minkowski(), .omega = 2 * kPi});
    CHECK(mink.pseudoscalar_square == -1.0);
    CHECK(std::abs(mink.kappa_fit) < 1e-9);
    CHECK(mink.transmitted == doctest::Approx(1.0).epsilon(1e-9));

    // The discrete Euclidean profile is real: no phase moves along the slab.
    for (const auto& v : slab_profile(SlabSetup{.omega = 2 * kPi})) CHECK(v.imag() == 0.0);
}

TEST_CASE("monopole flux through enclosing boxes") {
    const MonopoleSetup setup{.cells = 48, .h = 1.0 / 48, .charge = 1.0, .box_half_cells = {20, 23}};
    const auto rep = monopole_gauss_check(setup);
    REQUIRE(rep.ratio.size() == 2);
    for (double r : rep.ratio) CHECK(r == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rep.box_difference < 0.005);
    CHECK(rep.residual <= 1e-10);

    auto none = setup;
    none.charge = 0.0;
    const auto empty = monopole_gauss_check(none);
    CHECK(empty.flux[0] == 0.0);
    CHECK(empty.iterations == 0);

    auto tight = setup;
    tight.box_half_cells = {12};
    CHECK_THROWS_AS(monopole_gauss_check(tight), ExperimentError);
    auto slow = setup;
    slow.max_iterations = 3;
    CHECK_THROWS_AS(monopole_gauss_check(slow), ExperimentError);
}

TEST_CASE("duality time series") {
    const auto g = GridSpec::cubic(8, 1.0);
    const auto zero = duality_row(FieldState(g));
    CHECK(zero.lagrangian == 0.0);
    CHECK(zero.hamiltonian_rotated == 0.0);
    CHECK(zero.poynting_rotated == std::array<double, 3>{0, 0, 0});

    Leapfrog lf(plane_wave_state(GridSpec(16, 8, 8, 1.0 / 16), PlaneWave{{1, 0, 0}, {0, 1, 1}, 1.0, 0.5}, 3.0, 1.0), 0.01);
    std::vector<FieldState> snaps;
    for (int k = 0; k < 4; ++k) {
        snaps.push_back(lf.synchronized());
        lf.run(7);
    }
    const auto rows = duality_timeseries(snaps);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.lagrangian_rotated == -r.lagrangian);
        CHECK(r.hamiltonian_rotated == r.hamiltonian);
        CHECK(r.pseudoscalar_rotated == -r.pseudoscalar);
        CHECK(r.poynting_rotated == r.poynting);
        CHECK(r.hamiltonian > 0);
    }
    std::ostringstream csv;
    write_duality_csv(csv, rows);
    CHECK(csv.str().find(",yes,yes\n") != std::string::npos);
    CHECK(csv.str().find(",no") == std::string::npos);
}

TEST_CASE("Minkowski pulses travel at no more than c") {
    const double v = measure_group_speed(PulseSetup{});
    CHECK(v > 0.95);
    CHECK(v <= 1.0 + 1e-3);
    const double slow = measure_group_speed(PulseSetup{.c = 0.5});
    CHECK(slow == doctest::Approx(0.5 * v).epsilon(1e-6));
}

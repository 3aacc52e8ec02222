// Batch front end. Machine-readable results go to files under --out; human
// text goes to stderr. Exit status: 0 all checks pass, 1 a check failed or a
// run broke down, 2 bad flags or configuration.

#include "CLI11.hpp"
#include "blade_oracle.hpp"
#include "report.hpp"
#include "sta/fields/densities.hpp"
#include "sta/fields/gauge.hpp"
#include "sta/fields/parallel.hpp"
#include "sta/fields/random_state.hpp"
#include "sta/fields/residual.hpp"
#include "sta/fields/snapshot.hpp"
#include "sta/fields/transforms.hpp"
#include "sta/simulator/config.hpp"
#include "sta/simulator/experiments.hpp"
#include "sta/simulator/initial_conditions.hpp"
#include "sta/simulator/timeseries.hpp"
#include "sta/symbolic/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>

#ifndef STA_CORPUS_DIR
#define STA_CORPUS_DIR "data/corpus"
#endif

using namespace sta;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

/// Bad input detected after flag parsing; reported with exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out = "out";
    std::string format = "csv";
    bool verbose = false;
    unsigned workers = 0;

    cli::Format fmt() const { return format == "json" ? cli::Format::Json : cli::Format::Csv; }

    fs::path out_dir() const {
        fs::create_directories(out);
        return out;
    }
};

Signature parse_signature(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--signature expects p,q, got '" + text + "'");
    try {
        return Signature(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
    } catch (const std::exception& e) {
        throw UsageError("--signature '" + text + "': " + e.what());
    }
}

void note(const Common& c, const std::string& text) {
    if (c.verbose) std::cerr << text << '\n';
}

void wrote(const fs::path& p) { std::cerr << "wrote " << p.string() << '\n'; }

int verdict(bool ok, const std::string& what) {
    std::cerr << (ok ? "PASS " : "FAIL ") << what << '\n';
    return ok ? 0 : 1;
}

double max_abs_difference(const fields::ScalarGrid& a, const fields::ScalarGrid& b) {
    double m = 0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

// verify-identities ---------------------------------------------------------

struct VerifyOptions {
    std::string signature;
    std::string corpus = STA_CORPUS_DIR;
};

int verify_identities(const Common& c, const VerifyOptions& o) {
    std::vector<Signature> sigs;
    if (!o.signature.empty()) sigs.push_back(parse_signature(o.signature));

    cli::Table kernel({"signature", "blade_pairs", "mismatches", "pseudoscalar_square"});
    bool kernel_ok = true;
    const std::vector<Signature> kernel_sigs =
        sigs.empty() ? std::vector<Signature>{Signature(1, 3), Signature(4, 0), Signature(3, 1), Signature(2, 2)} : sigs;
    for (const auto& sig : kernel_sigs) {
        long mismatches = 0;
        const auto blades = static_cast<unsigned>(sig.blade_count());
        for (unsigned a = 0; a < blades; ++a) {
            for (unsigned b = 0; b < blades; ++b) {
                const auto got = MultivectorD::blade(sig, static_cast<BladeMask>(a), 1.0) *
                                 MultivectorD::blade(sig, static_cast<BladeMask>(b), 1.0);
                const auto want = oracle::multiply_words(sig, a, b);
                if (!(got == MultivectorD::blade(sig, static_cast<BladeMask>(want.mask), want.sign))) {
                    ++mismatches;
                    std::cerr << "kernel mismatch in " << sig.name() << ": " << format_blade(sig, static_cast<BladeMask>(a))
                              << " * " << format_blade(sig, static_cast<BladeMask>(b)) << '\n';
                }
            }
        }
        const auto i = pseudoscalar<double>(sig);
        kernel.add({sig.name(), static_cast<long>(blades) * blades, mismatches, scalar_part(i * i)});
        kernel_ok = kernel_ok && mismatches == 0;
    }

    const auto items = symbolic::load_corpus_dir(o.corpus);
    const auto report = symbolic::run_corpus(items, sigs);
    cli::Table identities({"name", "signature", "passed", "differences"});
    for (const auto& r : report.results) {
        std::string diff;
        for (const auto& d : r.differences) diff += (diff.empty() ? "" : "; ") + d.blade + ": " + d.lhs_minus_rhs.to_string();
        identities.add({r.name, r.signature, r.passed, diff});
        if (!r.passed) std::cerr << "identity failed: " << r.name << " in " << r.signature << " (" << diff << ")\n";
    }
    const auto dir = c.out_dir();
    wrote(kernel.write(dir, "kernel_oracle", c.fmt()));
    wrote(identities.write(dir, "identities", c.fmt()));
    if (report.results.empty()) std::cerr << "no corpus items for the selected signature\n";
    const int k = verdict(kernel_ok, "kernel products match the sorting oracle");
    const int s = verdict(report.all_passed(), std::to_string(report.results.size() - report.failures()) + "/" +
                                                   std::to_string(report.results.size()) + " identities");
    return std::max(k, s);
}

// check-equivalence ---------------------------------------------------------

struct RandomOptions {
    std::uint64_t seed = 42;
    int n = 100;
    int grid = 32;
    double box = 1.0;
    double mass = 0.5;
};

fields::SmoothFieldOptions smooth_options(const RandomOptions& o) {
    fields::SmoothFieldOptions opt;
    opt.mass = o.mass;
    return opt;
}

int check_equivalence(const Common& c, const RandomOptions& o, int gauge_pairs) {
    const auto g = fields::GridSpec::cubic(o.grid, o.box);
    cli::Table eq({"seed", "max_deviation"});
    double worst = 0;
    for (int k = 0; k < o.n; ++k) {
        const auto seed = o.seed + static_cast<std::uint64_t>(k);
        const auto rs = fields::random_smooth_state(g, seed, smooth_options(o));
        const double d = fields::equivalence_deviation(rs.state, rs.rates);
        eq.add({seed, d});
        worst = std::max(worst, d);
        note(c, "state " + std::to_string(seed) + ": " + fields::format_double(d));
    }

    cli::Table gauge({"seed", "field_change", "expansion_defect", "direct_divergence_defect", "gradient_square_l2"});
    double field = 0, expansion = 0, witness = std::numeric_limits<double>::infinity();
    for (int k = 0; k < gauge_pairs; ++k) {
        const auto seed = o.seed + 100000 + static_cast<std::uint64_t>(k);
        const auto rs = fields::random_smooth_state(g, seed, smooth_options(o));
        const auto chi = fields::random_gauge(g, seed + 1, smooth_options(o));
        const auto r = fields::gauge_report(rs.state, rs.rates, chi);
        gauge.add({seed, r.field_change, r.expansion_defect, r.direct_divergence_defect, r.witness.l2});
        field = std::max(field, r.field_change);
        expansion = std::max(expansion, r.expansion_defect);
        witness = std::min(witness, r.witness.l2);
    }

    const auto dir = c.out_dir();
    wrote(eq.write(dir, "equivalence", c.fmt()));
    if (gauge_pairs > 0) wrote(gauge.write(dir, "gauge", c.fmt()));
    std::cerr << "max per-cell unified-vs-vector deviation: " << fields::format_double(worst) << '\n';
    int status = verdict(worst <= 1e-12, "unified and vector residuals agree to 1e-12 on " + std::to_string(o.n) + " states");
    if (gauge_pairs > 0) {
        status = std::max(status, verdict(field <= 1e-12 && expansion <= 1e-12 && witness > 0,
                                          "gauge: F change " + fields::format_double(field) + ", expansion defect " +
                                              fields::format_double(expansion) + ", min (grad chi)^2 " +
                                              fields::format_double(witness)));
    }
    return status;
}

// simulate ------------------------------------------------------------------

struct SimFlags {
    std::optional<int> grid;
    std::optional<double> box, mass, dt;
    std::optional<long> steps;
    std::optional<std::string> signature;
    std::string config;
    long snapshot_every = 0;
    bool refine = false;
};

sim::SimConfig build_config(const SimFlags& f) {
    sim::SimConfig cfg;
    if (f.grid) cfg.cells = {*f.grid, *f.grid, *f.grid};
    if (f.box) cfg.box = *f.box;
    if (f.mass) cfg.mass = *f.mass;
    if (f.dt) cfg.dt = *f.dt;
    if (f.steps) cfg.steps = *f.steps;
    if (f.signature) {
        const auto sig = parse_signature(*f.signature);
        if (sig == Signature::minkowski()) {
            cfg.signature = sim::SignatureMode::Minkowski;
        } else if (sig == Signature::euclidean()) {
            cfg.signature = sim::SignatureMode::Euclidean;
        } else {
            throw UsageError("simulate supports --signature 1,3 or 4,0");
        }
    }
    // The config file has the last word.
    if (!f.config.empty()) cfg = sim::load_config(f.config, cfg);
    return cfg;
}

struct RunResult {
    std::vector<sim::Sample> samples;
    double worst_electric = 0;
    double worst_magnetic = 0;
};

RunResult run_simulation(const Common& c, const sim::SimConfig& cfg, const fs::path& snap_dir, long snapshot_every) {
    auto state = sim::initial_state(cfg);
    const double dt = cfg.dt > 0 ? cfg.dt : sim::kMaxCourant * state.grid.h() / state.c;
    sim::Leapfrog lf(state, dt);
    RunResult out;
    // Intermediate snapshots come from the sample windows, which is why
    // --snapshot-every must be a multiple of the cadence.
    auto snapshot = [&](long step, const fields::FieldState& s) {
        if (snap_dir.empty()) return;
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%08ld.csv", step);
        fields::write_snapshot(snap_dir / name, s);
    };
    snapshot(0, lf.synchronized());
    sim::run_sampled(lf, cfg.steps, cfg.cadence, [&](const sim::SampleWindow& w) {
        auto s = sim::measure(w);
        out.worst_electric = std::max(out.worst_electric, s.conservation.electric.l2);
        out.worst_magnetic = std::max(out.worst_magnetic, s.conservation.magnetic.linf);
        note(c, "t = " + fields::format_double(s.t) + "  H = " + fields::format_double(s.hamiltonian));
        out.samples.push_back(s);
        if (snapshot_every > 0 && w.step % snapshot_every == 0) snapshot(w.step, w.cur);
    });
    if (cfg.steps > 0) snapshot(cfg.steps, lf.synchronized());
    return out;
}

cli::Table timeseries_table(const std::vector<sim::Sample>& samples) {
    cli::Table t({"step", "t", "lagrangian", "hamiltonian", "gauss_electric_l2", "gauss_electric_linf", "gauss_magnetic_l2",
                  "gauss_magnetic_linf", "lorenz_l2", "lorenz_linf", "conservation_electric_l2",
                  "conservation_magnetic_linf"});
    for (const auto& s : samples) {
        t.add({s.step, s.t, s.lagrangian, s.hamiltonian, s.gauss_electric.l2, s.gauss_electric.linf, s.gauss_magnetic.l2,
               s.gauss_magnetic.linf, s.lorenz.l2, s.lorenz.linf, s.conservation.electric.l2, s.conservation.magnetic.linf});
    }
    return t;
}

int simulate(const Common& c, const SimFlags& f) {
    auto cfg = build_config(f);
    if (cfg.signature == sim::SignatureMode::Euclidean) {
        throw UsageError("time stepping is ill-posed in Euclidean signature; use euclidean-evanescence");
    }
    cfg.validate();
    if (f.snapshot_every % cfg.cadence != 0) throw UsageError("--snapshot-every must be a multiple of the cadence");
    const auto dir = c.out_dir();
    const auto snaps = dir / "snapshots";
    fs::create_directories(snaps);

    const auto run = run_simulation(c, cfg, snaps, f.snapshot_every);
    wrote(timeseries_table(run.samples).write(dir, "timeseries", c.fmt()));
    std::cerr << "conservation: electric l2 max " << fields::format_double(run.worst_electric) << ", magnetic max "
              << fields::format_double(run.worst_magnetic) << '\n';
    if (!f.refine) return 0;

    // Same physical run with h and dt halved.
    auto fine = cfg;
    for (auto& n : fine.cells) n *= 2;
    fine.dt = cfg.dt > 0 ? cfg.dt / 2 : 0;
    fine.steps = cfg.steps * 2;
    fine.cadence = cfg.cadence * 2;
    if (!std::holds_alternative<sim::PlaneWave>(fine.initial) && !std::holds_alternative<sim::GaussianMonopole>(fine.initial) &&
        !std::holds_alternative<sim::GaussianCharge>(fine.initial)) {
        throw UsageError("--refine needs a generated initial condition, not a snapshot");
    }
    const auto fine_run = run_simulation(c, fine, {}, 0);
    const double ratio = run.worst_electric / fine_run.worst_electric;
    cli::Table conv({"cells_x", "steps", "conservation_electric_l2_max", "conservation_magnetic_linf_max"});
    conv.add({cfg.cells[0], cfg.steps, run.worst_electric, run.worst_magnetic});
    conv.add({fine.cells[0], fine.steps, fine_run.worst_electric, fine_run.worst_magnetic});
    wrote(conv.write(dir, "conservation_convergence", c.fmt()));
    return verdict(ratio >= 3.2 && ratio <= 4.8 && run.worst_magnetic == 0 && fine_run.worst_magnetic == 0,
                   "conservation residual ratio " + fields::format_double(ratio) + " for h -> h/2, magnetic max " +
                       fields::format_double(std::max(run.worst_magnetic, fine_run.worst_magnetic)));
}

// dispersion-scan -----------------------------------------------------------

struct DispersionFlags {
    int grid = 128;
    double box = 1.0;
    int mode = 1;
    double c = 1.0;
    int periods = 5;
    std::vector<double> mass_ratios{0.0, 0.5, 1.0};
    std::optional<double> mass;
};

int dispersion_scan(const Common& c, const DispersionFlags& f) {
    if (f.grid % 2 != 0) throw UsageError("--grid must be even: the scan also runs at half resolution");
    const double k = 2 * kPi * f.mode / f.box;
    std::vector<double> masses;
    if (f.mass) {
        masses.push_back(*f.mass);
    } else {
        for (double r : f.mass_ratios) masses.push_back(r * k);
    }
    std::vector<sim::DispersionRun> runs;
    for (int cells : {f.grid / 2, f.grid}) {
        for (double m : masses) runs.push_back({.cells = cells, .box = f.box, .mode = f.mode, .mass = m, .c = f.c, .periods = f.periods});
    }
    const auto res = sim::measure_dispersion(runs);
    const auto dir = c.out_dir();
    const std::size_t nm = masses.size();
    for (int half = 0; half < 2; ++half) {
        cli::Table t({"k", "omega_measured", "omega_predicted", "relative_error"});
        for (std::size_t j = 0; j < nm; ++j) {
            const auto& r = res[static_cast<std::size_t>(half) * nm + j];
            t.add({r.k, r.omega_measured, r.omega_predicted, r.relative_error});
        }
        wrote(t.write(dir, "dispersion_N" + std::to_string(half ? f.grid : f.grid / 2), c.fmt()));
    }
    cli::Table conv({"mass", "relative_error_coarse", "relative_error_fine", "error_ratio"});
    bool ok = true;
    for (std::size_t j = 0; j < nm; ++j) {
        const auto& coarse = res[j];
        const auto& fine = res[nm + j];
        const double ratio = coarse.relative_error / fine.relative_error;
        conv.add({masses[j], coarse.relative_error, fine.relative_error, ratio});
        ok = ok && fine.relative_error < 0.01 && ratio >= 3.2 && ratio <= 4.8;
        std::cerr << "m = " << fields::format_double(masses[j]) << ": omega " << fields::format_double(fine.omega_measured)
                  << " vs " << fields::format_double(fine.omega_predicted) << ", error ratio " << fields::format_double(ratio)
                  << '\n';
    }
    wrote(conv.write(dir, "dispersion_convergence", c.fmt()));
    return verdict(ok, "dispersion within 1% at N=" + std::to_string(f.grid) + " with error ratio in [3.2, 4.8]");
}

// euclidean-evanescence -----------------------------------------------------

struct SlabFlags {
    int grid = 128;
    double box = 1.0;
    double slab = 2.0;
    double c = 1.0;
    std::optional<double> omega;
    std::string signature;
};

int evanescence(const Common& c, const SlabFlags& f) {
    const double omega = f.omega ? *f.omega : 2 * kPi * f.c / f.box;
    std::vector<Signature> sigs{Signature::euclidean(), Signature::minkowski()};
    if (!f.signature.empty()) sigs = {parse_signature(f.signature)};

    cli::Table t({"signature", "omega", "pseudoscalar_square", "kappa_fit", "kappa_expected", "relative_error", "far_distance",
                  "far_nodes", "transmitted"});
    cli::Table profile({"x", "signature", "re_E", "im_E", "abs_E"});
    bool ok = true;
    for (const auto& sig : sigs) {
        const sim::SlabSetup setup{.signature = sig, .cells = f.grid, .length = f.slab * f.box, .omega = omega, .c = f.c};
        const auto r = sim::euclidean_evanescence(setup);
        t.add({sig.name(), r.omega, r.pseudoscalar_square, r.kappa_fit, r.kappa_expected, r.relative_error, r.far_distance,
               r.far_nodes, r.transmitted});
        const auto e = sim::slab_profile(setup);
        for (std::size_t j = 0; j < e.size(); ++j) {
            profile.add({static_cast<double>(j) * setup.length / setup.cells, sig.name(), e[j].real(), e[j].imag(), std::abs(e[j])});
        }
        if (r.pseudoscalar_square > 0) {
            const bool decays = r.relative_error <= 0.02 && r.far_nodes > 0 && r.transmitted < 1e-4;
            ok = ok && decays;
            std::cerr << sig.name() << ": kappa " << fields::format_double(r.kappa_fit) << " vs "
                      << fields::format_double(r.kappa_expected) << ", beyond 10 decay lengths "
                      << fields::format_double(r.transmitted) << '\n';
        } else {
            std::cerr << sig.name() << ": propagating, amplitude at distance " << fields::format_double(r.far_distance) << " is "
                      << fields::format_double(r.transmitted) << '\n';
        }
    }
    const auto dir = c.out_dir();
    wrote(t.write(dir, "evanescence", c.fmt()));
    wrote(profile.write(dir, "slab_profile", c.fmt()));
    return verdict(ok, "evanescent decay rate within 2% and no transmission beyond 10 decay lengths");
}

// monopole-gauss ------------------------------------------------------------

struct MonopoleFlags {
    int grid = 64;
    double box = 1.0;
    double charge = 1.0;
    double width = 0.0;
    std::vector<int> boxes{22, 28};
    double tolerance = 1e-10;
};

int monopole(const Common& c, const MonopoleFlags& f) {
    const auto rep = sim::monopole_gauss_check({.cells = f.grid,
                                                .h = f.box / f.grid,
                                                .charge = f.charge,
                                                .width = f.width,
                                                .box_half_cells = f.boxes,
                                                .tolerance = f.tolerance});
    cli::Table t({"box_half_width", "flux", "flux_over_4pi_charge", "charge", "width", "iterations", "residual"});
    bool ok = f.charge == 0 ? true : rep.box_difference < 0.005;
    for (std::size_t k = 0; k < rep.flux.size(); ++k) {
        t.add({rep.box_half_widths[k], rep.flux[k], rep.ratio[k], rep.charge, rep.width, rep.iterations, rep.residual});
        ok = ok && (f.charge == 0 ? rep.flux[k] == 0 : rep.ratio[k] >= 0.99 && rep.ratio[k] <= 1.01);
    }
    wrote(t.write(c.out_dir(), "monopole_gauss", c.fmt()));
    std::string ratios;
    for (double r : rep.ratio) ratios += " " + fields::format_double(r);
    return verdict(ok, "flux / 4 pi e_m:" + ratios + ", box spread " + fields::format_double(rep.box_difference));
}

// duality-report ------------------------------------------------------------

int duality_report(const Common& c, const RandomOptions& o, const std::string& snapshots) {
    std::vector<sim::DualityRow> rows;
    double h_alpha = 0;
    if (!snapshots.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(snapshots)) {
            if (e.path().extension() == ".csv" && fs::exists(fields::sidecar_path(e.path()))) files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) throw UsageError("no snapshots in " + snapshots);
        for (std::size_t k = 0; k < files.size(); ++k) rows.push_back(sim::duality_row(fields::read_snapshot(files[k]), static_cast<long>(k)));
    } else {
        const auto g = fields::GridSpec::cubic(o.grid, o.box);
        std::mt19937_64 rng(o.seed);
        std::vector<double> alphas;
        for (int k = 0; k < 10; ++k) alphas.push_back(fields::uniform(rng, -2 * kPi, 2 * kPi));
        for (int k = 0; k < o.n; ++k) {
            const auto rs = fields::random_smooth_state(g, o.seed + static_cast<std::uint64_t>(k), smooth_options(o));
            const auto F = fields::assemble_faraday(rs.state);
            const auto Fq = fields::duality_rotate(F, kPi / 2);
            const auto H = fields::hamiltonian_density(F);
            const auto L = fields::lagrangian_density(F);
            const auto Lq = fields::lagrangian_density(Fq);
            for (std::size_t n = 0; n < L.size(); ++n) {
                if (Lq[n] != -L[n]) h_alpha = std::numeric_limits<double>::infinity();
            }
            h_alpha = std::max(h_alpha, max_abs_difference(H, fields::hamiltonian_density(Fq)));
            const auto S = fields::poynting(F), Sq = fields::poynting(Fq);
            for (int a = 0; a < 3; ++a) h_alpha = std::max(h_alpha, max_abs_difference(S[a], Sq[a]));
            if (k < 10) {
                for (double alpha : alphas) h_alpha = std::max(h_alpha, max_abs_difference(H, fields::hamiltonian_density(fields::duality_rotate(F, alpha))));
            }
            rows.push_back(sim::duality_row(rs.state, k));
        }
    }
    cli::Table t({"index", "t", "lagrangian", "lagrangian_rotated", "hamiltonian", "hamiltonian_rotated", "pseudoscalar",
                  "pseudoscalar_rotated", "Sx", "Sy", "Sz", "Sx_rotated", "Sy_rotated", "Sz_rotated"});
    bool ok = h_alpha <= 1e-12;
    for (const auto& r : rows) {
        t.add({r.step, r.t, r.lagrangian, r.lagrangian_rotated, r.hamiltonian, r.hamiltonian_rotated, r.pseudoscalar,
               r.pseudoscalar_rotated, r.poynting[0], r.poynting[1], r.poynting[2], r.poynting_rotated[0], r.poynting_rotated[1],
               r.poynting_rotated[2]});
        ok = ok && r.lagrangian_rotated == -r.lagrangian && r.hamiltonian_rotated == r.hamiltonian &&
             r.pseudoscalar_rotated == -r.pseudoscalar && r.poynting_rotated == r.poynting;
    }
    wrote(t.write(c.out_dir(), "duality", c.fmt()));
    return verdict(ok, std::to_string(rows.size()) + " states: L negated, H and S unchanged under a quarter-turn duality rotation" +
                           (snapshots.empty() ? "; H unchanged over 10 angles" : ""));
}

// densities -----------------------------------------------------------------

int densities(const Common& c, const SimFlags& f, const std::string& snapshot, const RandomOptions& o, double max_rapidity) {
    fields::FieldState state = snapshot.empty() ? sim::initial_state(build_config(f)) : fields::read_snapshot(snapshot);
    const auto& g = state.grid;
    const auto F = fields::assemble_faraday(state);
    const auto L = fields::lagrangian_density(F);
    const auto H = fields::hamiltonian_density(F);
    const auto P = fields::pseudoscalar_invariant(F);
    const auto S = fields::poynting(F, state.c);
    cli::Table t({"i", "j", "k", "lagrangian", "hamiltonian", "pseudoscalar", "Sx", "Sy", "Sz"});
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        const auto x = g.coords(n);
        t.add({x[0], x[1], x[2], L[n], H[n], P[n], S[0][n], S[1][n], S[2][n]});
    }

    // Boost invariants on random fields.
    const auto rg = fields::GridSpec::cubic(o.grid, o.box);
    std::mt19937_64 rng(o.seed);
    cli::Table lorentz({"seed", "rapidity", "axis", "lagrangian_change", "pseudoscalar_change", "hamiltonian_change"});
    double dl = 0, dp = 0, dh = 0;
    for (int k = 0; k < o.n; ++k) {
        const auto seed = o.seed + static_cast<std::uint64_t>(k);
        const auto Fr = fields::assemble_faraday(fields::random_smooth_state(rg, seed, smooth_options(o)).state);
        const double beta = fields::uniform(rng, -max_rapidity, max_rapidity);
        const int axis = 1 + static_cast<int>(rng() % 3);
        const auto Fb = fields::rotor_boost(Fr, beta, axis);
        const double a = max_abs_difference(fields::lagrangian_density(Fr), fields::lagrangian_density(Fb));
        const double b = max_abs_difference(fields::pseudoscalar_invariant(Fr), fields::pseudoscalar_invariant(Fb));
        const double h = max_abs_difference(fields::hamiltonian_density(Fr), fields::hamiltonian_density(Fb));
        lorentz.add({seed, beta, axis, a, b, h});
        dl = std::max(dl, a);
        dp = std::max(dp, b);
        dh = std::max(dh, h);
    }
    const auto dir = c.out_dir();
    wrote(t.write(dir, "densities", c.fmt()));
    wrote(lorentz.write(dir, "lorentz", c.fmt()));
    return verdict(dl <= 1e-12 && dp <= 1e-12 && (o.n == 0 || dh > 1e-6),
                   "boosts keep <F^2>_0 (" + fields::format_double(dl) + ") and <F^2>_4 (" + fields::format_double(dp) +
                       "), <FF^dagger>_0 moves by " + fields::format_double(dh));
}

void add_random_options(CLI::App* cmd, RandomOptions& o, int default_n, int default_grid) {
    o.n = default_n;
    o.grid = default_grid;
    cmd->add_option("--seed", o.seed, "first random-state seed")->capture_default_str();
    cmd->add_option("--n", o.n, "number of random states")->capture_default_str();
    cmd->add_option("--grid", o.grid, "cells per edge of the random-state grid")->capture_default_str()->check(CLI::Range(8, 512));
    cmd->add_option("--box", o.box, "edge length")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--mass", o.mass, "mass used for the random potentials' time dependence")->capture_default_str();
}

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
    cmd->add_option("--grid", f.grid, "cells per edge")->check(CLI::Range(8, 1024));
    cmd->add_option("--box", f.box, "edge length along x")->check(CLI::PositiveNumber);
    cmd->add_option("--mass", f.mass, "inverse Compton length m_gamma")->check(CLI::NonNegativeNumber);
    cmd->add_option("--dt", f.dt, "time step (default: c dt / h = 0.5)")->check(CLI::PositiveNumber);
    cmd->add_option("--steps", f.steps, "number of steps")->check(CLI::NonNegativeNumber);
    cmd->add_option("--signature", f.signature, "1,3 or 4,0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spacetime-algebra electrodynamics: identity checks, residuals and Maxwell-Proca experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--out", common.out, "output directory")->capture_default_str();
    app.add_option("--format", common.format, "report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_flag("-v,--verbose", common.verbose, "progress on stderr");
    app.add_option("--workers", common.workers, "worker threads (0 = hardware)");

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify-identities", "symbolic identity corpus and blade-product oracle");
    cmd_verify->add_option("--signature", verify.signature, "only items in Cl(p,q)");
    cmd_verify->add_option("--corpus", verify.corpus, "directory of *.idn files")->check(CLI::ExistingDirectory)->capture_default_str();

    RandomOptions equiv;
    int gauge_pairs = 20;
    auto* cmd_equiv = app.add_subcommand("check-equivalence", "unified vs vector residuals and the gauge suite on random states");
    add_random_options(cmd_equiv, equiv, 100, 32);
    cmd_equiv->add_option("--gauge-pairs", gauge_pairs, "random (A, chi) pairs")->capture_default_str();

    SimFlags sim_flags;
    auto* cmd_sim = app.add_subcommand("simulate", "leapfrog run with time series and snapshots");
    cmd_sim->add_option("config", sim_flags.config, "run config file (overrides flags)")->check(CLI::ExistingFile);
    add_sim_flags(cmd_sim, sim_flags);
    cmd_sim->add_option("--snapshot-every", sim_flags.snapshot_every, "steps between snapshots (0: first and last only)");
    cmd_sim->add_flag("--refine", sim_flags.refine, "repeat with h and dt halved and check the conservation residual order");

    DispersionFlags disp;
    auto* cmd_disp = app.add_subcommand("dispersion-scan", "measured vs predicted Proca frequencies at N and N/2");
    cmd_disp->add_option("--grid", disp.grid, "cells along x at the fine resolution")->capture_default_str();
    cmd_disp->add_option("--box", disp.box, "box length")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_disp->add_option("--mode", disp.mode, "wave number index along x")->capture_default_str();
    cmd_disp->add_option("--mass", disp.mass, "a single mass instead of the ratio list")->check(CLI::NonNegativeNumber);
    cmd_disp->add_option("--mass-ratios", disp.mass_ratios, "masses as multiples of k")->delimiter(',')->capture_default_str();
    cmd_disp->add_option("--periods", disp.periods, "fit window in periods")->capture_default_str();

    SlabFlags slab;
    auto* cmd_slab = app.add_subcommand("euclidean-evanescence", "driven slab: evanescent in Cl(4,0), propagating in Cl(1,3)");
    cmd_slab->add_option("--grid", slab.grid, "cells across the slab")->capture_default_str();
    cmd_slab->add_option("--box", slab.box, "reference length L")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_slab->add_option("--slab", slab.slab, "slab length in units of L")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_slab->add_option("--omega", slab.omega, "drive frequency (default 2 pi c / L)")->check(CLI::NonNegativeNumber);
    cmd_slab->add_option("--signature", slab.signature, "only this signature");

    MonopoleFlags mono;
    auto* cmd_mono = app.add_subcommand("monopole-gauss", "flux of a static Gaussian monopole through enclosing boxes");
    cmd_mono->add_option("--grid", mono.grid, "nodes per edge")->capture_default_str();
    cmd_mono->add_option("--box", mono.box, "edge length")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_mono->add_option("--charge", mono.charge, "magnetic charge e_m")->capture_default_str();
    cmd_mono->add_option("--width", mono.width, "Gaussian width (default 4h)");
    cmd_mono->add_option("--boxes", mono.boxes, "measurement box half-widths in cells")->delimiter(',')->capture_default_str();
    cmd_mono->add_option("--tolerance", mono.tolerance, "relative SOR residual")->capture_default_str();

    RandomOptions dual;
    std::string snapshots;
    auto* cmd_dual = app.add_subcommand("duality-report", "quarter-turn duality table for snapshots or random states");
    add_random_options(cmd_dual, dual, 100, 32);
    cmd_dual->add_option("--snapshots", snapshots, "directory of snapshots (otherwise random states)")->check(CLI::ExistingDirectory);

    SimFlags dens_flags;
    RandomOptions boosts;
    std::string dens_snapshot;
    double max_rapidity = 1.0;
    auto* cmd_dens = app.add_subcommand("densities", "per-node L, H, <F^2>_4 and Poynting vector; boost invariants");
    cmd_dens->add_option("--config", dens_flags.config, "config for the state")->check(CLI::ExistingFile);
    cmd_dens->add_option("--snapshot", dens_snapshot, "snapshot for the state")->check(CLI::ExistingFile);
    add_sim_flags(cmd_dens, dens_flags);
    cmd_dens->add_option("--seed", boosts.seed, "first random-state seed for the boost check")->capture_default_str();
    cmd_dens->add_option("--n", boosts.n, "random (F, beta) pairs")->capture_default_str();
    cmd_dens->add_option("--max-rapidity", max_rapidity, "boost rapidities drawn from [-b, b]")->capture_default_str();
    boosts.n = 20;
    boosts.grid = 16;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code == 0) return 0;
        std::cerr << app.help();
        return 2;
    }

    fields::set_worker_count(common.workers);
    try {
        if (*cmd_verify) return verify_identities(common, verify);
        if (*cmd_equiv) return check_equivalence(common, equiv, gauge_pairs);
        if (*cmd_sim) return simulate(common, sim_flags);
        if (*cmd_disp) return dispersion_scan(common, disp);
        if (*cmd_slab) return evanescence(common, slab);
        if (*cmd_mono) return monopole(common, mono);
        if (*cmd_dual) return duality_report(common, dual, snapshots);
        if (*cmd_dens) return densities(common, dens_flags, dens_snapshot, boosts, max_rapidity);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const sim::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

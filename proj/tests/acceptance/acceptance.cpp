// End-to-end acceptance run: one pass/fail line per criterion, exit status 1
// if any criterion fails. Thresholds are the published acceptance numbers.

#include "blade_oracle.hpp"
#include "sta/fields/densities.hpp"
#include "sta/fields/gauge.hpp"
#include "sta/fields/random_state.hpp"
#include "sta/fields/residual.hpp"
#include "sta/fields/transforms.hpp"
#include "sta/simulator/config.hpp"
#include "sta/simulator/experiments.hpp"
#include "sta/simulator/initial_conditions.hpp"
#include "sta/simulator/timeseries.hpp"
#include "sta/symbolic/corpus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace sta;
using namespace sta::fields;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double max_abs_difference(const ScalarGrid& a, const ScalarGrid& b) {
    double m = 0;
    for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome symbolic_corpus() {
    const auto start = std::chrono::steady_clock::now();
    const auto items = symbolic::load_corpus_dir(STA_CORPUS_DIR);
    const auto report = symbolic::run_corpus(items);
    std::set<std::string> names;
    for (const auto& r : report.results) names.insert(r.name);
    const char* required[] = {"pseudoscalar-square",         "euclidean-pseudoscalar-square", "field-square",
                              "field-adjoint-product",       "duality-rotation-quarter-turn", "duality-flips-field-square-scalar",
                              "duality-keeps-energy-density", "euclidean-field-square",       "euclidean-field-adjoint-product",
                              "euclidean-duality-swap-keeps-square"};
    std::string missing;
    for (const char* r : required) {
        if (!names.count(r)) missing += std::string(" ") + r;
    }
    std::string failed;
    for (const auto& r : report.results) {
        if (!r.passed) failed += " " + r.name;
    }

    // Negative control: a flipped sign on i^2 must fail and only that item.
    const auto control = symbolic::run_corpus(symbolic::parse_corpus(
        "[square-corrupted]\nsignature: 1,3\nlhs: i i\nrhs: 1\n"
        "[square-intact]\nsignature: 1,3\nlhs: i i\nrhs: -1\n"));
    const bool control_ok = control.failures() == 1 && !control.results[0].passed && control.results[1].passed;
    const double t = seconds_since(start);

    const bool ok = report.all_passed() && report.results.size() >= 18 && missing.empty() && control_ok && t < 1.0;
    std::string detail = std::to_string(report.results.size()) + " identities, " + std::to_string(report.failures()) +
                         " failed, negative control " + (control_ok ? "rejected" : "NOT rejected") + ", " + fmt(t) + " s";
    if (!failed.empty()) detail += "; failing:" + failed;
    if (!missing.empty()) detail += "; missing:" + missing;
    return {ok, detail};
}

Outcome kernel_oracle() {
    const auto start = std::chrono::steady_clock::now();
    long mismatches = 0;
    long pairs = 0;
    for (const auto& sig : {Signature(1, 3), Signature(4, 0), Signature(3, 1), Signature(2, 2)}) {
        for (unsigned a = 0; a < 16; ++a) {
            for (unsigned b = 0; b < 16; ++b) {
                const auto got = MultivectorD::blade(sig, static_cast<BladeMask>(a), 1.0) *
                                 MultivectorD::blade(sig, static_cast<BladeMask>(b), 1.0);
                const auto want = oracle::multiply_words(sig, a, b);
                const auto expected = MultivectorD::blade(sig, static_cast<BladeMask>(want.mask), want.sign);
                ++pairs;
                if (!(got == expected)) ++mismatches;
            }
        }
    }
    const auto i22 = pseudoscalar<double>(Signature(2, 2));
    const bool square_ok = i22 * i22 == MultivectorD::scalar(Signature(2, 2), 1.0);
    const double t = seconds_since(start);
    return {mismatches == 0 && square_ok && t < 1.0, std::to_string(pairs) + " blade pairs over 4 signatures, " +
                                                         std::to_string(mismatches) + " mismatches, Cl(2,2) i^2 = " +
                                                         (square_ok ? "+1" : "NOT +1") + ", " + fmt(t) + " s"};
}

constexpr int kStates = 100;
const GridSpec kGrid32 = GridSpec::cubic(32, 1.0);

Outcome unified_vector_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0;
    for (int seed = 0; seed < kStates; ++seed) {
        const auto rs = random_smooth_state(kGrid32, static_cast<std::uint64_t>(seed));
        worst = std::max(worst, equivalence_deviation(rs.state, rs.rates));
    }
    const double t = seconds_since(start);
    return {worst <= 1e-12 && t < 30.0,
            std::to_string(kStates) + " states on 32^3, max deviation " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome duality_behaviour() {
    double l_flip = 0, h_diff = 0, s_diff = 0, h_alpha = 0;
    std::mt19937_64 rng(2024);
    std::vector<double> alphas;
    for (int k = 0; k < 10; ++k) alphas.push_back(uniform(rng, -2 * kPi, 2 * kPi));
    for (int seed = 0; seed < kStates; ++seed) {
        const auto rs = random_smooth_state(kGrid32, static_cast<std::uint64_t>(seed));
        const auto F = assemble_faraday(rs.state);
        const auto Fq = duality_rotate(F, kPi / 2);
        const auto L = lagrangian_density(F);
        const auto Lq = lagrangian_density(Fq);
        for (std::size_t n = 0; n < L.size(); ++n) l_flip = std::max(l_flip, std::abs(Lq[n] + L[n]));
        const auto H = hamiltonian_density(F);
        h_diff = std::max(h_diff, max_abs_difference(H, hamiltonian_density(Fq)));
        const auto S = poynting(F);
        const auto Sq = poynting(Fq);
        for (int a = 0; a < 3; ++a) s_diff = std::max(s_diff, max_abs_difference(S[a], Sq[a]));
        if (seed < 10) {
            for (double alpha : alphas) h_alpha = std::max(h_alpha, max_abs_difference(H, hamiltonian_density(duality_rotate(F, alpha))));
        }
    }
    const bool ok = l_flip == 0.0 && h_diff <= 1e-12 && s_diff <= 1e-12 && h_alpha <= 1e-12;
    return {ok, "L'+L max " + fmt(l_flip) + ", H'-H max " + fmt(h_diff) + ", S'-S max " + fmt(s_diff) +
                    ", H over 10 angles max " + fmt(h_alpha)};
}

Outcome gauge_suite() {
    double field = 0, expansion = 0, witness = std::numeric_limits<double>::infinity();
    for (int seed = 0; seed < 20; ++seed) {
        const auto rs = random_smooth_state(kGrid32, static_cast<std::uint64_t>(1000 + seed));
        const auto chi = random_gauge(kGrid32, static_cast<std::uint64_t>(5000 + seed));
        const auto rep = gauge_report(rs.state, rs.rates, chi);
        field = std::max(field, rep.field_change);
        expansion = std::max(expansion, rep.expansion_defect);
        witness = std::min(witness, rep.witness.l2);
    }
    return {field <= 1e-12 && expansion <= 1e-12 && witness > 0,
            "20 pairs: F change " + fmt(field) + ", expansion defect " + fmt(expansion) + ", min |(grad chi)^2| " + fmt(witness)};
}

Outcome lorentz_checks() {
    const auto g = GridSpec::cubic(16, 1.0);
    std::mt19937_64 rng(77);
    double l_diff = 0, p_diff = 0, h_change = 0;
    for (int seed = 0; seed < 20; ++seed) {
        const auto F = assemble_faraday(random_smooth_state(g, static_cast<std::uint64_t>(300 + seed)).state);
        const double beta = uniform(rng, -1.0, 1.0);
        const int axis = 1 + static_cast<int>(rng() % 3);
        const auto Fb = rotor_boost(F, beta, axis);
        l_diff = std::max(l_diff, max_abs_difference(lagrangian_density(F), lagrangian_density(Fb)));
        p_diff = std::max(p_diff, max_abs_difference(pseudoscalar_invariant(F), pseudoscalar_invariant(Fb)));
        h_change = std::max(h_change, max_abs_difference(hamiltonian_density(F), hamiltonian_density(Fb)));
    }
    return {l_diff <= 1e-12 && p_diff <= 1e-12 && h_change > 1e-6,
            "20 boosts: <F^2>_0 change " + fmt(l_diff) + ", <F^2>_4 change " + fmt(p_diff) + ", witness |d<FF^dagger>_0| " +
                fmt(h_change)};
}

Outcome massive_dispersion() {
    const auto start = std::chrono::steady_clock::now();
    const double k = 2 * kPi;
    std::vector<sim::DispersionRun> runs;
    for (int cells : {64, 128}) {
        for (double m : {0.0, k / 2, k}) runs.push_back({.cells = cells, .mass = m});
    }
    const auto res = sim::measure_dispersion(runs);
    bool ok = true;
    std::string detail;
    for (int j = 0; j < 3; ++j) {
        const auto& coarse = res[static_cast<std::size_t>(j)];
        const auto& fine = res[static_cast<std::size_t>(j + 3)];
        const double ratio = coarse.relative_error / fine.relative_error;
        ok = ok && fine.relative_error < 0.01 && ratio >= 3.2 && ratio <= 4.8;
        detail += "m=" + fmt(runs[static_cast<std::size_t>(j)].mass) + ": err " + fmt(fine.relative_error) + " ratio " +
                  fmt(ratio) + "; ";
    }
    const double t = seconds_since(start);
    return {ok && t < 120.0, detail + fmt(t) + " s"};
}

Outcome euclidean_evanescence() {
    const auto rep = sim::euclidean_evanescence({.signature = Signature::euclidean(), .cells = 128, .length = 2.0, .omega = 2 * kPi});
    const auto mink = sim::euclidean_evanescence({.signature = Signature::minkowski(), .cells = 128, .length = 2.0, .omega = 2 * kPi});
    const bool ok = rep.relative_error <= 0.02 && rep.far_nodes > 0 && rep.transmitted < 1e-4;
    return {ok, "kappa " + fmt(rep.kappa_fit) + " vs " + fmt(rep.kappa_expected) + " (err " + fmt(rep.relative_error) +
                    "), amplitude beyond 10 decay lengths " + fmt(rep.transmitted) + " over " + std::to_string(rep.far_nodes) +
                    " nodes; Minkowski contrast " + fmt(mink.transmitted)};
}

Outcome monopole_gauss() {
    const auto rep = sim::monopole_gauss_check({.cells = 64, .h = 1.0 / 64, .charge = 1.0});
    bool ok = rep.box_difference < 0.005;
    std::string detail = "flux/4pi e_m:";
    for (double r : rep.ratio) {
        ok = ok && r >= 0.99 && r <= 1.01;
        detail += " " + fmt(r);
    }
    return {ok, detail + ", box spread " + fmt(rep.box_difference) + ", " + std::to_string(rep.iterations) + " SOR sweeps"};
}

double worst_electric_conservation(int n, long steps, long cadence) {
    const auto g = GridSpec(n, 16 * n / 64, 16 * n / 64, 1.0 / n);
    const auto s = sim::plane_wave_state(g, sim::PlaneWave{{1, 0, 0}, {0, 1, 0}, 1.0, 1.0}, 2 * kPi, 1.0);
    sim::Leapfrog lf(s, 0.5 * g.h());
    double worst = 0;
    sim::run_sampled(lf, steps, cadence, [&](const sim::SampleWindow& w) {
        worst = std::max(worst, sim::measure(w).conservation.electric.l2);
    });
    return worst;
}

Outcome conservation() {
    const double coarse = worst_electric_conservation(32, 5000, 250);
    const double fine = worst_electric_conservation(64, 10000, 500);
    const double ratio = coarse / fine;

    sim::SimConfig cfg;
    cfg.cells = {32, 32, 32};
    cfg.mass = 1.0;
    cfg.initial = sim::GaussianMonopole{1.0, 0.0};
    sim::Leapfrog lf(sim::initial_state(cfg), cfg.time_step());
    double magnetic = 0;
    sim::run_sampled(lf, 200, 20, [&](const sim::SampleWindow& w) {
        magnetic = std::max(magnetic, sim::measure(w).conservation.magnetic.linf);
    });
    return {ratio >= 3.2 && ratio <= 4.8 && magnetic == 0.0, "electric residual " + fmt(coarse) + " -> " + fmt(fine) +
                                                                 " (ratio " + fmt(ratio) + "), static monopole div j_m max " +
                                                                 fmt(magnetic)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"symbolic corpus", symbolic_corpus},
        {"kernel oracle", kernel_oracle},
        {"unified/vector equivalence", unified_vector_equivalence},
        {"duality", duality_behaviour},
        {"gauge", gauge_suite},
        {"Lorentz boosts", lorentz_checks},
        {"massive dispersion", massive_dispersion},
        {"Euclidean evanescence", euclidean_evanescence},
        {"monopole Gauss law", monopole_gauss},
        {"conservation", conservation},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.passed) ++failures;
        std::printf("%s %2zu %-27s %s [%.1f s]\n", out.passed ? "PASS" : "FAIL", k + 1, criteria[k].first, out.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

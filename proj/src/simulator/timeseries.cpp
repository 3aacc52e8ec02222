#include "sta/simulator/timeseries.hpp"

#include "sta/fields/densities.hpp"
#include "sta/fields/derivatives.hpp"
#include "sta/fields/multivector_field.hpp"
#include "sta/fields/parallel.hpp"
#include "sta/fields/snapshot.hpp"
#include "sta/fields/transforms.hpp"

#include <deque>
#include <numbers>

namespace sta::sim {

using fields::FieldState;
using fields::format_double;
using fields::ScalarGrid;

void run_sampled(Leapfrog& lf, long steps, long cadence, const std::function<void(const SampleWindow&)>& on_sample) {
    if (cadence < 1) throw SimulationError("cadence must be at least 1");
    const long start = lf.steps_taken();
    auto is_centre = [&](long n) { return n > 0 && n % cadence == 0 && n < steps; };
    std::deque<std::pair<long, FieldState>> ring;
    for (long n = 0;; ++n) {
        if (is_centre(n - 1) || is_centre(n) || is_centre(n + 1)) {
            if (!ring.empty() && ring.back().first != n - 1) ring.clear();
            ring.emplace_back(n, lf.synchronized());
            if (ring.size() > 3) ring.pop_front();
            if (ring.size() == 3 && is_centre(n - 1)) {
                on_sample({start + n - 1, lf.dt(), ring[0].second, ring[1].second, ring[2].second});
            }
        }
        if (n == steps) break;
        lf.step();
    }
}

double integrate(const fields::GridSpec& g, const ScalarGrid& f) {
    return fields::pairwise_sum(f) * g.h() * g.h() * g.h();
}

Sample measure(const SampleWindow& w) {
    const auto& s = w.cur;
    const auto& g = s.grid;
    const auto rates = fields::central_difference(w.prev, w.next, w.dt);
    const auto F = fields::assemble_faraday(s);

    Sample out;
    out.step = w.step;
    out.t = s.t;
    out.lagrangian = integrate(g, fields::lagrangian_density(F));
    out.hamiltonian = integrate(g, fields::hamiltonian_density(F));

    const double four_pi = 4.0 * std::numbers::pi;
    const double m2 = s.mass * s.mass;
    auto ge = fields::divergence(g, s.E);
    auto gm = fields::divergence(g, s.B);
    auto lz = fields::divergence(g, s.A);
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        ge[n] += -four_pi * s.rho_e[n] + m2 * s.A0[n];
        gm[n] -= four_pi * s.rho_m[n];
        lz[n] += rates.dA0[n] / s.c;
    }
    out.gauss_electric = fields::norms(ge);
    out.gauss_magnetic = fields::norms(gm);
    out.lorenz = fields::norms(lz);
    out.conservation = fields::conservation_report(s, rates);
    return out;
}

void write_timeseries_csv(std::ostream& out, const std::vector<Sample>& samples) {
    out << "step,t,lagrangian,hamiltonian,gauss_electric_l2,gauss_electric_linf,gauss_magnetic_l2,"
           "gauss_magnetic_linf,lorenz_l2,lorenz_linf,conservation_electric_l2,conservation_magnetic_linf\n";
    for (const auto& s : samples) {
        out << s.step << ',' << format_double(s.t) << ',' << format_double(s.lagrangian) << ','
            << format_double(s.hamiltonian) << ',' << format_double(s.gauss_electric.l2) << ','
            << format_double(s.gauss_electric.linf) << ',' << format_double(s.gauss_magnetic.l2) << ','
            << format_double(s.gauss_magnetic.linf) << ',' << format_double(s.lorenz.l2) << ','
            << format_double(s.lorenz.linf) << ',' << format_double(s.conservation.electric.l2) << ','
            << format_double(s.conservation.magnetic.linf) << '\n';
    }
}

DualityRow duality_row(const FieldState& s, long step) {
    const auto& g = s.grid;
    const auto F = fields::assemble_faraday(s);
    const auto Fr = fields::duality_rotate(F, std::numbers::pi / 2);
    DualityRow row;
    row.step = step;
    row.t = s.t;
    row.lagrangian = integrate(g, fields::lagrangian_density(F));
    row.lagrangian_rotated = integrate(g, fields::lagrangian_density(Fr));
    row.hamiltonian = integrate(g, fields::hamiltonian_density(F));
    row.hamiltonian_rotated = integrate(g, fields::hamiltonian_density(Fr));
    row.pseudoscalar = integrate(g, fields::pseudoscalar_invariant(F));
    row.pseudoscalar_rotated = integrate(g, fields::pseudoscalar_invariant(Fr));
    const auto S = fields::poynting(F, s.c);
    const auto Sr = fields::poynting(Fr, s.c);
    for (std::size_t a = 0; a < 3; ++a) {
        row.poynting[a] = integrate(g, S[a]);
        row.poynting_rotated[a] = integrate(g, Sr[a]);
    }
    return row;
}

std::vector<DualityRow> duality_timeseries(const std::vector<FieldState>& snapshots) {
    std::vector<DualityRow> rows;
    rows.reserve(snapshots.size());
    for (std::size_t k = 0; k < snapshots.size(); ++k) rows.push_back(duality_row(snapshots[k], static_cast<long>(k)));
    return rows;
}

void write_duality_csv(std::ostream& out, const std::vector<DualityRow>& rows) {
    out << "index,t,lagrangian,lagrangian_rotated,hamiltonian,hamiltonian_rotated,pseudoscalar,pseudoscalar_rotated,"
           "Sx,Sy,Sz,Sx_rotated,Sy_rotated,Sz_rotated,lagrangian_negated,hamiltonian_invariant\n";
    for (const auto& r : rows) {
        out << r.step << ',' << format_double(r.t) << ',' << format_double(r.lagrangian) << ','
            << format_double(r.lagrangian_rotated) << ',' << format_double(r.hamiltonian) << ','
            << format_double(r.hamiltonian_rotated) << ',' << format_double(r.pseudoscalar) << ','
            << format_double(r.pseudoscalar_rotated);
        for (double v : r.poynting) out << ',' << format_double(v);
        for (double v : r.poynting_rotated) out << ',' << format_double(v);
        out << ',' << (r.lagrangian_rotated == -r.lagrangian ? "yes" : "no") << ','
            << (r.hamiltonian_rotated == r.hamiltonian ? "yes" : "no") << '\n';
    }
}

}  // namespace sta::sim

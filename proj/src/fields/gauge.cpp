#include "sta/fields/gauge.hpp"

#include "sta/fields/densities.hpp"
#include "sta/fields/derivatives.hpp"
#include "sta/fields/multivector_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sta::fields {

namespace {

void require_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw GridError("gauge function and state live on different grids");
}

double max_difference(const MultivectorField& a, const MultivectorField& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < a.cells.size(); ++n) {
        for (int k = 0; k < a.signature.blade_count(); ++k) {
            const auto bk = static_cast<BladeMask>(k);
            worst = std::max(worst, std::abs(a.cells[n][bk] - b.cells[n][bk]));
        }
    }
    return worst;
}

}  // namespace

FieldState gauge_transform(const FieldState& s, const GaugeField& chi) {
    require_grid(s.grid, chi.grid);
    FieldState out = s;
    const auto grad = gradient(s.grid, chi.chi);
    for (std::size_t n = 0; n < s.grid.cell_count(); ++n) {
        out.A0[n] += chi.chi_t[n] / s.c;
        for (int a = 0; a < 3; ++a) out.A[a][n] -= grad[a][n];
    }
    return out;
}

FieldRates gauge_transform(const FieldRates& r, const GaugeField& chi, double c) {
    FieldRates out = r;
    const auto grad = gradient(chi.grid, chi.chi_t);
    for (std::size_t n = 0; n < chi.grid.cell_count(); ++n) {
        out.dA0[n] += chi.chi_tt[n] / c;
        for (int a = 0; a < 3; ++a) out.dA[a][n] -= grad[a][n];
    }
    return out;
}

GaugeReport gauge_report(const FieldState& s, const FieldRates& r, const GaugeField& chi) {
    require_grid(s.grid, chi.grid);
    const auto& g = s.grid;
    const auto s2 = gauge_transform(s, chi);
    const auto r2 = gauge_transform(r, chi, s.c);

    const auto A = assemble_vector(g, s.A0, s.A);
    const auto dA = assemble_vector(g, r.dA0, r.dA);
    const auto A2 = assemble_vector(g, s2.A0, s2.A);
    const auto dA2 = assemble_vector(g, r2.dA0, r2.dA);

    GaugeReport out;
    const auto nablaA = nabla(A, dA, s.c);
    out.field_change = max_difference(grade(nabla(A2, dA2, s.c), 2), grade(nablaA, 2));

    // nabla chi, and chi A with its time derivative for the direct divergence.
    const auto G = A2 - A;
    MultivectorField chiA(g, A.signature);
    MultivectorField dchiA(g, A.signature);
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        chiA.cells[n] = A.cells[n] * chi.chi[n];
        dchiA.cells[n] = A.cells[n] * chi.chi_t[n] + dA.cells[n] * chi.chi[n];
    }
    const auto div_chiA_direct = nabla(chiA, dchiA, s.c);

    std::vector<double> witness(g.cell_count());
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        const double lhs = graded_product(A2.cells[n], A2.cells[n], 0)[0];
        const double a2 = graded_product(A.cells[n], A.cells[n], 0)[0];
        const double g2 = graded_product(G.cells[n], G.cells[n], 0)[0];
        const double divA = nablaA.cells[n][0];
        const double chi_divA = chi.chi[n] * divA;
        // Product rule on the same discrete operators: div(chi A) = (nabla chi).A + chi div A.
        const double div_chiA = graded_product(G.cells[n], A.cells[n], 0)[0] + chi_divA;
        const double rhs = a2 + g2 + 2 * div_chiA - 2 * chi_divA;
        const double rhs_direct = a2 + g2 + 2 * div_chiA_direct.cells[n][0] - 2 * chi_divA;
        out.expansion_defect = std::max(out.expansion_defect, std::abs(lhs - rhs));
        out.direct_divergence_defect = std::max(out.direct_divergence_defect, std::abs(lhs - rhs_direct));
        witness[n] = g2;
    }
    out.witness = norms(witness);
    return out;
}

nlohmann::json to_json(const GaugeReport& r) {
    return {{"field_change", r.field_change},
            {"expansion_defect", r.expansion_defect},
            {"direct_divergence_defect", r.direct_divergence_defect},
            {"gradient_square", {{"linf", r.witness.linf}, {"l2", r.witness.l2}}}};
}

ConservationReport conservation_report(const FieldState& s, const FieldRates& r) {
    const auto& g = s.grid;
    const auto div_je = divergence(g, s.j_e);
    const auto div_jm = divergence(g, s.j_m);
    const auto div_A = divergence(g, s.A);
    const double k = s.c / (4.0 * std::numbers::pi) * s.mass * s.mass;
    std::vector<double> electric(g.cell_count());
    std::vector<double> magnetic(g.cell_count());
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        const double dje = r.drho_e[n] + div_je[n];
        const double lorenz = r.dA0[n] / s.c + div_A[n];
        electric[n] = dje - k * lorenz;
        magnetic[n] = r.drho_m[n] + div_jm[n];
    }
    return {norms(electric), norms(magnetic)};
}

nlohmann::json to_json(const ConservationReport& r) {
    return {{"electric", {{"linf", r.electric.linf}, {"l2", r.electric.l2}}},
            {"magnetic", {{"linf", r.magnetic.linf}, {"l2", r.magnetic.l2}}}};
}

}  // namespace sta::fields

#include "sta/fields/residual.hpp"

#include "sta/fields/derivatives.hpp"
#include "sta/fields/parallel.hpp"

#include <cmath>
#include <numbers>

namespace sta::fields {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

std::array<Norms, 5> grade_norms(const MultivectorField& f) {
    std::array<Norms, 5> out{};
    const int n = f.signature.dimension();
    for (int k = 0; k <= n; ++k) {
        std::vector<double> length(f.cells.size());
        for (std::size_t c = 0; c < f.cells.size(); ++c) {
            double sum = 0.0;
            for (int b = 0; b < f.signature.blade_count(); ++b) {
                if (blade_grade(static_cast<BladeMask>(b)) == k) sum += f.cells[c][static_cast<BladeMask>(b)] * f.cells[c][static_cast<BladeMask>(b)];
            }
            length[c] = std::sqrt(sum);
        }
        out[static_cast<std::size_t>(k)] = norms(length);
    }
    return out;
}

ScalarGrid scaled(const ScalarGrid& v, double s) {
    ScalarGrid out = v;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace

MultivectorField unified_residual_field(const FieldState& s, const FieldRates& r) {
    s.validate();
    const auto& g = s.grid;
    const auto F = assemble_faraday(s);
    const auto dF = assemble_faraday(g, r.dE, r.dB);
    const auto je = assemble_vector(g, scaled(s.rho_e, s.c), s.j_e);
    const auto jm = assemble_vector(g, scaled(s.rho_m, s.c), s.j_m);
    const auto A = assemble_vector(g, s.A0, s.A);
    const auto i = pseudoscalar<double>(F.signature);

    auto out = nabla(F, dF, s.c);
    const double k = kFourPi / s.c;
    const double m2 = s.mass * s.mass;
    parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) {
            out.cells[n] -= (je.cells[n] - i * jm.cells[n]) * k;
            out.cells[n] += A.cells[n] * m2;
        }
    });
    return out;
}

ResidualReport residual_unified(const FieldState& s, const FieldRates& r) {
    ResidualReport out;
    out.grade = grade_norms(unified_residual_field(s, r));
    return out;
}

VectorResidual vector_residual_fields(const FieldState& s, const FieldRates& r) {
    s.validate();
    const auto& g = s.grid;
    const double inv_c = 1.0 / s.c;
    const double k = kFourPi / s.c;
    const double m2 = s.mass * s.mass;

    VectorResidual out{divergence(g, s.E), curl(g, s.E), divergence(g, s.B), curl(g, s.B)};
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        out.gauss_electric[n] += -kFourPi * s.rho_e[n] + m2 * s.A0[n];
        out.gauss_magnetic[n] -= kFourPi * s.rho_m[n];
        for (int a = 0; a < 3; ++a) {
            out.faraday[a][n] += inv_c * r.dB[a][n] + k * s.j_m[a][n];
            out.ampere[a][n] += -k * s.j_e[a][n] - inv_c * r.dE[a][n] + m2 * s.A[a][n];
        }
    }
    return out;
}

ResidualReport residual_vector_form(const FieldState& s, const FieldRates& r) {
    const auto v = vector_residual_fields(s, r);
    ResidualReport out;
    out.gauss_electric = norms(v.gauss_electric);
    out.faraday = norms(v.faraday);
    out.gauss_magnetic = norms(v.gauss_magnetic);
    out.ampere = norms(v.ampere);
    return out;
}

MultivectorField assemble_vector_residual(const GridSpec& g, const VectorResidual& v) {
    const auto sig = Signature::minkowski();
    const auto g0 = MultivectorD::generator(sig, 0);
    const auto i = pseudoscalar<double>(sig);
    std::array<MultivectorD, 3> sigma{relative_basis<double>(sig, 1), relative_basis<double>(sig, 2),
                                      relative_basis<double>(sig, 3)};
    std::array<MultivectorD, 3> dual{relative_dual_basis<double>(sig, 1), relative_dual_basis<double>(sig, 2),
                                     relative_dual_basis<double>(sig, 3)};
    MultivectorField out(g, sig);
    parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) {
            auto even = MultivectorD::scalar(sig, v.gauss_electric[n]) + i * v.gauss_magnetic[n];
            for (int k = 0; k < 3; ++k) {
                even -= sigma[k] * v.ampere[k][n];
                even += dual[k] * v.faraday[k][n];
            }
            out.cells[n] = g0 * even;
        }
    });
    return out;
}

double equivalence_deviation(const FieldState& s, const FieldRates& r) {
    const auto unified = unified_residual_field(s, r);
    const auto vector = assemble_vector_residual(s.grid, vector_residual_fields(s, r));
    double worst = 0.0;
    for (std::size_t n = 0; n < unified.cells.size(); ++n) {
        for (int b = 0; b < 16; ++b) {
            const auto bm = static_cast<BladeMask>(b);
            worst = std::max(worst, std::abs(unified.cells[n][bm] - vector.cells[n][bm]));
        }
    }
    return worst;
}

nlohmann::json to_json(const Norms& n) { return {{"linf", n.linf}, {"l2", n.l2}}; }

nlohmann::json to_json(const ResidualReport& r) {
    nlohmann::json grades = nlohmann::json::array();
    for (const auto& g : r.grade) grades.push_back(to_json(g));
    return {{"unified_by_grade", grades},
            {"gauss_electric", to_json(r.gauss_electric)},
            {"faraday", to_json(r.faraday)},
            {"gauss_magnetic", to_json(r.gauss_magnetic)},
            {"ampere", to_json(r.ampere)}};
}

}  // namespace sta::fields

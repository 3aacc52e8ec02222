#pragma once

#include "sta/fields/multivector_field.hpp"
#include "sta/fields/norms.hpp"

#include "json.hpp"

#include <array>

namespace sta::fields {

/// Residual norms of the field equations. For the unified form, grade[k]
/// holds norms of the coefficient length of grade k of the residual
/// multivector. For the vector form, the four equations are reported
/// separately; unused halves stay zero.
struct ResidualReport {
    std::array<Norms, 5> grade{};
    Norms gauss_electric;  // div E - 4 pi rho_e + m^2 A0
    Norms faraday;         // curl E + c^-1 dB/dt + 4 pi c^-1 j_m
    Norms gauss_magnetic;  // div B - 4 pi rho_m
    Norms ampere;          // curl B - 4 pi c^-1 j_e - c^-1 dE/dt + m^2 A
};

/// R = nabla F - 4 pi c^-1 (j_e - i j_m) + m^2 A per node, with
/// j = c rho g0 + j^k g_k and A = A0 g0 + A^k g_k.
MultivectorField unified_residual_field(const FieldState& s, const FieldRates& r);
ResidualReport residual_unified(const FieldState& s, const FieldRates& r);

struct VectorResidual {
    ScalarGrid gauss_electric;
    VectorGrid faraday;
    ScalarGrid gauss_magnetic;
    VectorGrid ampere;
};

VectorResidual vector_residual_fields(const FieldState& s, const FieldRates& r);
ResidualReport residual_vector_form(const FieldState& s, const FieldRates& r);

/// Multivector built from the four vector-form residuals:
/// g0 (gauss_e - ampere^k s_k + faraday^k i s_k + gauss_m i).
MultivectorField assemble_vector_residual(const GridSpec& g, const VectorResidual& v);

/// Largest coefficient difference between the unified residual and the
/// reassembled vector-form residual over all nodes.
double equivalence_deviation(const FieldState& s, const FieldRates& r);

nlohmann::json to_json(const Norms& n);
nlohmann::json to_json(const ResidualReport& r);

}  // namespace sta::fields

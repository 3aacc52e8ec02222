#pragma once

#include "sta/fields/norms.hpp"
#include "sta/fields/state.hpp"

#include "json.hpp"

namespace sta::fields {

/// Gauge function chi with its first two time derivatives at the state time.
struct GaugeField {
    explicit GaugeField(const GridSpec& g) : grid(g), chi(zeros(g)), chi_t(zeros(g)), chi_tt(zeros(g)) {}

    GridSpec grid;
    ScalarGrid chi, chi_t, chi_tt;
};

/// A -> A + nabla chi: A0 += c^-1 chi_t, A^k -= d_k chi. E, B and sources are
/// left as they are.
FieldState gauge_transform(const FieldState& s, const GaugeField& chi);
FieldRates gauge_transform(const FieldRates& r, const GaugeField& chi, double c);

struct GaugeReport {
    double field_change = 0.0;      // max coefficient of (nabla^A') - (nabla^A)
    double expansion_defect = 0.0;  // A'.A' against A^2 + (nabla chi)^2 + 2 div(chi A) - 2 chi div A, product-rule divergence
    double direct_divergence_defect = 0.0;  // same check with div(chi A) differenced directly
    Norms witness;                          // (nabla chi)^2
};

/// Needs the potential's time derivatives in r.
GaugeReport gauge_report(const FieldState& s, const FieldRates& r, const GaugeField& chi);

nlohmann::json to_json(const GaugeReport& r);

struct ConservationReport {
    Norms electric;  // div j_e - (c / 4 pi) m^2 div A, spacetime divergences
    Norms magnetic;  // div j_m
};

/// Spacetime divergences c^-1 d_t(c rho) + div j and c^-1 d_t A0 + div A
/// from the rates and central differences.
ConservationReport conservation_report(const FieldState& s, const FieldRates& r);

nlohmann::json to_json(const ConservationReport& r);

}  // namespace sta::fields

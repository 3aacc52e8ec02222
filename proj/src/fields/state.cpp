#include "sta/fields/state.hpp"

#include <string>

namespace sta::fields {

FieldState::FieldState(GridSpec g)
    : grid(g),
      E(zero_vectors(g)),
      B(zero_vectors(g)),
      A0(zeros(g)),
      A(zero_vectors(g)),
      rho_e(zeros(g)),
      rho_m(zeros(g)),
      j_e(zero_vectors(g)),
      j_m(zero_vectors(g)) {}

void FieldState::validate() const {
    const std::size_t n = grid.cell_count();
    auto check = [n](const ScalarGrid& f, const char* name) {
        if (f.size() != n) throw GridError(std::string(name) + " has " + std::to_string(f.size()) + " cells, expected " + std::to_string(n));
    };
    for (int a = 0; a < 3; ++a) {
        check(E[a], "E");
        check(B[a], "B");
        check(A[a], "A");
        check(j_e[a], "j_e");
        check(j_m[a], "j_m");
    }
    check(A0, "A0");
    check(rho_e, "rho_e");
    check(rho_m, "rho_m");
    if (!(mass >= 0)) throw GridError("photon mass must be >= 0");
    if (!(c > 0)) throw GridError("c must be positive");
}

FieldRates::FieldRates(const GridSpec& g)
    : dE(zero_vectors(g)), dB(zero_vectors(g)), dA0(zeros(g)), dA(zero_vectors(g)), drho_e(zeros(g)), drho_m(zeros(g)) {}

namespace {

void difference(ScalarGrid& out, const ScalarGrid& prev, const ScalarGrid& next, double inv) {
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = (next[n] - prev[n]) * inv;
}

}  // namespace

FieldRates central_difference(const FieldState& prev, const FieldState& next, double dt) {
    if (!(prev.grid == next.grid)) throw GridError("snapshots are on different grids");
    if (!(dt > 0)) throw GridError("snapshot spacing must be positive");
    FieldRates r(prev.grid);
    const double inv = 1.0 / (2.0 * dt);
    for (int a = 0; a < 3; ++a) {
        difference(r.dE[a], prev.E[a], next.E[a], inv);
        difference(r.dB[a], prev.B[a], next.B[a], inv);
        difference(r.dA[a], prev.A[a], next.A[a], inv);
    }
    difference(r.dA0, prev.A0, next.A0, inv);
    difference(r.drho_e, prev.rho_e, next.rho_e, inv);
    difference(r.drho_m, prev.rho_m, next.rho_m, inv);
    return r;
}

}  // namespace sta::fields

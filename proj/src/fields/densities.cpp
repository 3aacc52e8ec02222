#include "sta/fields/densities.hpp"

#include "sta/fields/parallel.hpp"

#include <numbers>

namespace sta::fields {

MultivectorD graded_product(const MultivectorD& a, const MultivectorD& b, int k) {
    a.require_same(b);
    const auto& table = product_table(a.signature());
    const int count = a.blade_count();
    std::array<std::array<double, 16>, 16> terms{};
    std::array<std::size_t, 16> used{};
    for (int i = 0; i < count; ++i) {
        const auto bi = static_cast<BladeMask>(i);
        if (a[bi] == 0.0) continue;
        for (int j = 0; j < count; ++j) {
            const auto bj = static_cast<BladeMask>(j);
            const auto target = static_cast<std::size_t>(i ^ j);
            if (b[bj] == 0.0 || blade_grade(static_cast<BladeMask>(target)) != k) continue;
            terms[target][used[target]++] = table.sign[i][j] * (a[bi] * b[bj]);
        }
    }
    MultivectorD out(a.signature());
    for (int t = 0; t < count; ++t) {
        const auto ut = static_cast<std::size_t>(t);
        if (used[ut] > 0) out[static_cast<BladeMask>(t)] = exact_sum(std::span<const double>(terms[ut].data(), used[ut]));
    }
    return out;
}

namespace {

template <class Fn>
ScalarGrid per_cell(const MultivectorField& F, Fn fn) {
    ScalarGrid out(F.cells.size());
    parallel_for(out.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) out[n] = fn(F.cells[n]);
    });
    return out;
}

}  // namespace

ScalarGrid lagrangian_density(const MultivectorField& F) {
    return per_cell(F, [](const MultivectorD& f) { return graded_product(f, f, 0)[0]; });
}

ScalarGrid hamiltonian_density(const MultivectorField& F) {
    return per_cell(F, [](const MultivectorD& f) { return graded_product(f, adjoint(f), 0)[0]; });
}

ScalarGrid pseudoscalar_invariant(const MultivectorField& F) {
    const auto top = static_cast<BladeMask>(F.signature.blade_count() - 1);
    const int n = F.signature.dimension();
    return per_cell(F, [&](const MultivectorD& f) { return graded_product(f, f, n)[top]; });
}

VectorGrid poynting(const MultivectorField& F, double c) {
    const double scale = c / (8.0 * std::numbers::pi);
    std::array<MultivectorD, 3> sigma{relative_basis<double>(F.signature, 1), relative_basis<double>(F.signature, 2),
                                      relative_basis<double>(F.signature, 3)};
    VectorGrid out = zero_vectors(F.grid);
    parallel_for(F.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) {
            const auto p = graded_product(F.cells[n], adjoint(F.cells[n]), 2);
            for (int k = 0; k < 3; ++k) out[k][n] = scale * component_along(p, sigma[k]);
        }
    });
    return out;
}

}  // namespace sta::fields

#include "sta/fields/derivatives.hpp"

#include "sta/fields/parallel.hpp"

namespace sta::fields {

ScalarGrid partial(const GridSpec& g, const ScalarGrid& f, int axis) {
    ScalarGrid out(f.size());
    const double inv = 1.0 / (2.0 * g.h());
    const int n = g.n(axis);
    parallel_for(static_cast<std::size_t>(g.nz()), [&](std::size_t k0, std::size_t k1) {
        for (int k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            for (int j = 0; j < g.ny(); ++j) {
                for (int i = 0; i < g.nx(); ++i) {
                    std::array<int, 3> lo{i, j, k};
                    std::array<int, 3> hi{i, j, k};
                    auto& l = lo[static_cast<std::size_t>(axis)];
                    auto& h = hi[static_cast<std::size_t>(axis)];
                    l = (l + n - 1) % n;
                    h = (h + 1) % n;
                    out[g.index(i, j, k)] = (f[g.index(hi[0], hi[1], hi[2])] - f[g.index(lo[0], lo[1], lo[2])]) * inv;
                }
            }
        }
    });
    return out;
}

ScalarGrid divergence(const GridSpec& g, const VectorGrid& v) {
    auto out = partial(g, v[0], 0);
    const auto dy = partial(g, v[1], 1);
    const auto dz = partial(g, v[2], 2);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = out[n] + dy[n] + dz[n];
    return out;
}

VectorGrid curl(const GridSpec& g, const VectorGrid& v) {
    VectorGrid out;
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        const auto dbc = partial(g, v[c], b);
        const auto dcb = partial(g, v[b], c);
        out[a].resize(dbc.size());
        for (std::size_t n = 0; n < dbc.size(); ++n) out[a][n] = dbc[n] - dcb[n];
    }
    return out;
}

VectorGrid gradient(const GridSpec& g, const ScalarGrid& f) {
    return {partial(g, f, 0), partial(g, f, 1), partial(g, f, 2)};
}

}  // namespace sta::fields

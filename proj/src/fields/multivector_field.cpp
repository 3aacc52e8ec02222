#include "sta/fields/multivector_field.hpp"

#include "sta/fields/parallel.hpp"

namespace sta::fields {

namespace {

template <class Fn>
MultivectorField map_cells(const MultivectorField& like, Fn fn) {
    MultivectorField out(like.grid, like.signature);
    parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) out.cells[n] = fn(n);
    });
    return out;
}

}  // namespace

void MultivectorField::require_same(const MultivectorField& other) const {
    if (!(grid == other.grid)) throw GridError("multivector fields live on different grids");
    if (signature != other.signature) {
        throw AlgebraError("multivector fields use " + signature.name() + " and " + other.signature.name());
    }
}

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b) {
    a.require_same(b);
    return map_cells(a, [&](std::size_t n) { return a.cells[n] + b.cells[n]; });
}

MultivectorField operator-(const MultivectorField& a, const MultivectorField& b) {
    a.require_same(b);
    return map_cells(a, [&](std::size_t n) { return a.cells[n] - b.cells[n]; });
}

MultivectorField operator*(const MultivectorField& a, double s) {
    return map_cells(a, [&](std::size_t n) { return a.cells[n] * s; });
}

MultivectorField operator*(const MultivectorField& a, const MultivectorD& m) {
    return map_cells(a, [&](std::size_t n) { return a.cells[n] * m; });
}

MultivectorField operator*(const MultivectorD& m, const MultivectorField& a) {
    return map_cells(a, [&](std::size_t n) { return m * a.cells[n]; });
}

MultivectorField operator*(const MultivectorField& a, const MultivectorField& b) {
    a.require_same(b);
    return map_cells(a, [&](std::size_t n) { return a.cells[n] * b.cells[n]; });
}

MultivectorField grade(const MultivectorField& a, int k) {
    return map_cells(a, [&](std::size_t n) { return sta::grade(a.cells[n], k); });
}

MultivectorField assemble_faraday(const GridSpec& g, const VectorGrid& E, const VectorGrid& B, const Signature& sig) {
    if (sig.dimension() != 4 || sig.p() < 1) throw AlgebraError("Faraday bivector needs a 4-d algebra with g0^2 = +1");
    std::array<MultivectorD, 3> sigma{relative_basis<double>(sig, 1), relative_basis<double>(sig, 2),
                                      relative_basis<double>(sig, 3)};
    std::array<MultivectorD, 3> dual{relative_dual_basis<double>(sig, 1), relative_dual_basis<double>(sig, 2),
                                     relative_dual_basis<double>(sig, 3)};
    MultivectorField F(g, sig);
    parallel_for(F.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) {
            MultivectorD m(sig);
            for (int k = 0; k < 3; ++k) {
                m += sigma[k] * E[k][n];
                m += dual[k] * B[k][n];
            }
            F.cells[n] = m;
        }
    });
    return F;
}

MultivectorField assemble_faraday(const FieldState& state) { return assemble_faraday(state.grid, state.E, state.B); }

MultivectorField assemble_vector(const GridSpec& g, const ScalarGrid& t, const VectorGrid& v) {
    const auto sig = Signature::minkowski();
    MultivectorField out(g, sig);
    for (std::size_t n = 0; n < out.cells.size(); ++n) {
        auto& m = out.cells[n];
        m[1] = t[n];
        m[2] = v[0][n];
        m[4] = v[1][n];
        m[8] = v[2][n];
    }
    return out;
}

RelativeFields read_faraday(const MultivectorField& F) {
    const auto& sig = F.signature;
    RelativeFields out{zero_vectors(F.grid), zero_vectors(F.grid)};
    for (int k = 0; k < 3; ++k) {
        const auto s = relative_basis<double>(sig, k + 1);
        const auto d = relative_dual_basis<double>(sig, k + 1);
        for (std::size_t n = 0; n < F.cells.size(); ++n) {
            out.E[k][n] = component_along(F.cells[n], s);
            out.B[k][n] = component_along(F.cells[n], d);
        }
    }
    return out;
}

MultivectorField partial(const MultivectorField& f, int axis) {
    const auto& g = f.grid;
    const double inv = 1.0 / (2.0 * g.h());
    const int blades = f.signature.blade_count();
    MultivectorField out(g, f.signature);
    parallel_for(f.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) {
            const auto& hi = f.cells[g.neighbour(n, axis, +1)];
            const auto& lo = f.cells[g.neighbour(n, axis, -1)];
            auto& m = out.cells[n];
            for (int k = 0; k < blades; ++k) {
                const auto bk = static_cast<BladeMask>(k);
                m[bk] = (hi[bk] - lo[bk]) * inv;
            }
        }
    });
    return out;
}

namespace {

MultivectorField spatial_nabla(const MultivectorField& f) {
    const auto& sig = f.signature;
    if (sig.dimension() != 4) throw AlgebraError("the vector derivative needs a 4-d algebra");
    MultivectorField out(f.grid, sig);
    for (int axis = 0; axis < 3; ++axis) {
        const int mu = axis + 1;
        // g^mu = eta^{mu mu} g_mu
        const auto up = MultivectorD::generator(sig, mu) * static_cast<double>(sig.metric(mu));
        const auto d = partial(f, axis);
        parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
            for (std::size_t n = b; n < e; ++n) out.cells[n] += up * d.cells[n];
        });
    }
    return out;
}

}  // namespace

MultivectorField nabla(const MultivectorField& f, const MultivectorField& dfdt, double c) {
    f.require_same(dfdt);
    auto out = spatial_nabla(f);
    const auto& sig = f.signature;
    const auto up0 = MultivectorD::generator(sig, 0) * (static_cast<double>(sig.metric(0)) / c);
    parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t n = b; n < e; ++n) out.cells[n] += up0 * dfdt.cells[n];
    });
    return out;
}

MultivectorField nabla_static(const MultivectorField& f) { return spatial_nabla(f); }

}  // namespace sta::fields

#pragma once

#include "sta/algebra/multivector.hpp"
#include "sta/fields/state.hpp"

#include <vector>

namespace sta::fields {

/// One multivector per grid node, all in the same algebra.
struct MultivectorField {
    MultivectorField(GridSpec g, Signature s) : grid(g), signature(s), cells(g.cell_count(), MultivectorD(s)) {}

    GridSpec grid;
    Signature signature;
    std::vector<MultivectorD> cells;

    void require_same(const MultivectorField& other) const;
};

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator-(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator*(const MultivectorField& a, double s);
/// Cellwise products with a constant multivector.
MultivectorField operator*(const MultivectorField& a, const MultivectorD& m);
MultivectorField operator*(const MultivectorD& m, const MultivectorField& a);
/// Cellwise geometric product.
MultivectorField operator*(const MultivectorField& a, const MultivectorField& b);
MultivectorField grade(const MultivectorField& a, int k);

/// F = E^k g_k g0 - B^1 g2 g3 - B^2 g3 g1 - B^3 g1 g2, i.e. E + i B. The
/// Minkowski construction; in Cl(4,0) the same blades give E + i_E B.
MultivectorField assemble_faraday(const GridSpec& g, const VectorGrid& E, const VectorGrid& B,
                                  const Signature& sig = Signature::minkowski());
MultivectorField assemble_faraday(const FieldState& state);

/// t g0 + v^k g_k.
MultivectorField assemble_vector(const GridSpec& g, const ScalarGrid& t, const VectorGrid& v);

struct RelativeFields {
    VectorGrid E, B;
};

/// Inverse of assemble_faraday for the grade-2 part.
RelativeFields read_faraday(const MultivectorField& F);

/// Central difference of every coefficient along one axis.
MultivectorField partial(const MultivectorField& f, int axis);

/// Vector derivative sum_mu g^mu d_mu with g^mu = eta^{mu mu} g_mu and
/// d_0 = c^-1 d/dt supplied through dfdt (same grid and algebra as f).
MultivectorField nabla(const MultivectorField& f, const MultivectorField& dfdt, double c);

/// Vector derivative of a field known to be time independent.
MultivectorField nabla_static(const MultivectorField& f);

}  // namespace sta::fields

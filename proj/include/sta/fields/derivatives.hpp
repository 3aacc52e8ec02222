#pragma once

#include "sta/fields/grid.hpp"

namespace sta::fields {

/// Second-order central difference along one axis on the periodic grid.
ScalarGrid partial(const GridSpec& g, const ScalarGrid& f, int axis);

ScalarGrid divergence(const GridSpec& g, const VectorGrid& v);
VectorGrid curl(const GridSpec& g, const VectorGrid& v);
VectorGrid gradient(const GridSpec& g, const ScalarGrid& f);

}  // namespace sta::fields

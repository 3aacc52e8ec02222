#pragma once

#include "sta/fields/grid.hpp"

#include <span>

namespace sta::fields {

/// Max-abs and root-mean-square over the grid. The RMS is the L2 norm
/// normalised by the cell count, so it is comparable across resolutions.
struct Norms {
    double linf = 0.0;
    double l2 = 0.0;
};

Norms norms(std::span<const double> values);
/// Norms of the pointwise Euclidean length of a 3-vector field.
Norms norms(const VectorGrid& v);

}  // namespace sta::fields

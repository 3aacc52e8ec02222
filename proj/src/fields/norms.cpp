#include "sta/fields/norms.hpp"

#include "sta/fields/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sta::fields {

Norms norms(std::span<const double> values) {
    Norms out;
    if (values.empty()) return out;
    std::vector<double> squares(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        out.linf = std::max(out.linf, std::abs(values[n]));
        squares[n] = values[n] * values[n];
    }
    out.l2 = std::sqrt(pairwise_sum(squares) / static_cast<double>(values.size()));
    return out;
}

Norms norms(const VectorGrid& v) {
    std::vector<double> length(v[0].size());
    for (std::size_t n = 0; n < length.size(); ++n) {
        length[n] = std::sqrt(v[0][n] * v[0][n] + v[1][n] * v[1][n] + v[2][n] * v[2][n]);
    }
    return norms(length);
}

}  // namespace sta::fields

#include "sta/fields/grid.hpp"

#include <cmath>
#include <string>

namespace sta::fields {

GridSpec::GridSpec(int nx, int ny, int nz, double h) : n_{nx, ny, nz}, h_(h) {
    for (int a = 0; a < 3; ++a) {
        if (n_[static_cast<std::size_t>(a)] < 8) {
            throw GridError("grid needs at least 8 cells per axis, axis " + std::to_string(a) + " has " +
                            std::to_string(n_[static_cast<std::size_t>(a)]));
        }
    }
    if (!(h > 0) || !std::isfinite(h)) throw GridError("grid spacing must be positive and finite");
}

std::size_t GridSpec::neighbour(std::size_t cell, int axis, int offset) const noexcept {
    auto c = coords(cell);
    const int n = n_[static_cast<std::size_t>(axis)];
    int& x = c[static_cast<std::size_t>(axis)];
    x = ((x + offset) % n + n) % n;
    return index(c[0], c[1], c[2]);
}

std::array<int, 3> GridSpec::coords(std::size_t cell) const noexcept {
    const auto nx = static_cast<std::size_t>(n_[0]);
    const auto ny = static_cast<std::size_t>(n_[1]);
    return {static_cast<int>(cell % nx), static_cast<int>((cell / nx) % ny), static_cast<int>(cell / (nx * ny))};
}

std::array<double, 3> GridSpec::position(std::size_t cell) const noexcept {
    const auto c = coords(cell);
    return {c[0] * h_, c[1] * h_, c[2] * h_};
}

}  // namespace sta::fields

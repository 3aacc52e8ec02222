#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sta::fields {

class GridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Periodic box of nx*ny*nz cells with one spacing h on every axis. The
/// physical edge along axis a is n_a * h.
class GridSpec {
public:
    GridSpec(int nx, int ny, int nz, double h);

    /// N^3 cells in a cube of edge L.
    static GridSpec cubic(int n, double length) { return GridSpec(n, n, n, length / n); }

    int nx() const noexcept { return n_[0]; }
    int ny() const noexcept { return n_[1]; }
    int nz() const noexcept { return n_[2]; }
    int n(int axis) const { return n_.at(static_cast<std::size_t>(axis)); }
    double h() const noexcept { return h_; }
    double length(int axis) const { return n(axis) * h_; }
    std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(n_[0]) * static_cast<std::size_t>(n_[1]) * static_cast<std::size_t>(n_[2]);
    }

    std::size_t index(int i, int j, int k) const noexcept {
        return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n_[1]) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(n_[0]) +
               static_cast<std::size_t>(i);
    }
    /// Index of the cell shifted by `offset` along `axis`, wrapping periodically.
    std::size_t neighbour(std::size_t cell, int axis, int offset) const noexcept;
    std::array<int, 3> coords(std::size_t cell) const noexcept;
    /// Node (i,j,k) sits at (i h, j h, k h).
    std::array<double, 3> position(std::size_t cell) const noexcept;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::array<int, 3> n_;
    double h_;
};

using ScalarGrid = std::vector<double>;
using VectorGrid = std::array<ScalarGrid, 3>;

inline ScalarGrid zeros(const GridSpec& g) { return ScalarGrid(g.cell_count(), 0.0); }
inline VectorGrid zero_vectors(const GridSpec& g) { return {zeros(g), zeros(g), zeros(g)}; }

}  // namespace sta::fields

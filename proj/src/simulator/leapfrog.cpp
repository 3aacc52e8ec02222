#include "sta/simulator/leapfrog.hpp"

#include "sta/fields/parallel.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

namespace sta::sim {

using fields::GridSpec;
using fields::ScalarGrid;
using fields::VectorGrid;

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Neighbour offsets of one node for central differences.
struct Node {
    std::size_t n;
    std::array<std::size_t, 3> plus, minus;
};

/// Visits every node in z-slabs, giving its periodic neighbours.
template <class Body>
void for_each_node(const GridSpec& g, Body&& body) {
    fields::parallel_for(static_cast<std::size_t>(g.nz()), [&](std::size_t k0, std::size_t k1) {
        for (int k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            const int kp = (k + 1) % g.nz();
            const int km = (k + g.nz() - 1) % g.nz();
            for (int j = 0; j < g.ny(); ++j) {
                const int jp = (j + 1) % g.ny();
                const int jm = (j + g.ny() - 1) % g.ny();
                for (int i = 0; i < g.nx(); ++i) {
                    const int ip = (i + 1) % g.nx();
                    const int im = (i + g.nx() - 1) % g.nx();
                    const Node node{g.index(i, j, k),
                                    {g.index(ip, j, k), g.index(i, jp, k), g.index(i, j, kp)},
                                    {g.index(im, j, k), g.index(i, jm, k), g.index(i, j, km)}};
                    body(node);
                }
            }
        }
    });
}

inline double diff(const ScalarGrid& f, const Node& p, int axis, double inv2h) {
    const auto a = static_cast<std::size_t>(axis);
    return (f[p.plus[a]] - f[p.minus[a]]) * inv2h;
}

inline double curl_component(const VectorGrid& v, const Node& p, int a, double inv2h) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    return diff(v[static_cast<std::size_t>(c)], p, b, inv2h) - diff(v[static_cast<std::size_t>(b)], p, c, inv2h);
}

inline double divergence(const VectorGrid& v, const Node& p, double inv2h) {
    return diff(v[0], p, 0, inv2h) + diff(v[1], p, 1, inv2h) + diff(v[2], p, 2, inv2h);
}

}  // namespace

Leapfrog::Leapfrog(const fields::FieldState& initial, double dt) : s_(initial), dt_(dt) {
    s_.validate();
    if (!(dt > 0)) throw SimulationError("time step must be positive");
    add_electric_rate(s_.E, s_.A0, -0.5 * dt_);
}

void Leapfrog::add_electric_rate(VectorGrid& e, ScalarGrid& a0, double scale) const {
    const auto& g = s_.grid;
    const double inv2h = 1.0 / (2.0 * g.h());
    const double c = s_.c;
    const double m2 = s_.mass * s_.mass;
    for_each_node(g, [&](const Node& p) {
        for (int a = 0; a < 3; ++a) {
            const auto ua = static_cast<std::size_t>(a);
            const double rate = c * curl_component(s_.B, p, a, inv2h) + c * m2 * s_.A[ua][p.n] - kFourPi * s_.j_e[ua][p.n];
            e[ua][p.n] += scale * rate;
        }
        a0[p.n] -= scale * c * divergence(s_.A, p, inv2h);
    });
}

void Leapfrog::step() {
    add_electric_rate(s_.E, s_.A0, dt_);

    const auto& g = s_.grid;
    const double inv2h = 1.0 / (2.0 * g.h());
    const double c = s_.c;
    std::atomic<bool> finite{true};
    // B and A are written, E and A0 only read, so one pass suffices.
    for_each_node(g, [&](const Node& p) {
        bool ok = true;
        for (int a = 0; a < 3; ++a) {
            const auto ua = static_cast<std::size_t>(a);
            s_.B[ua][p.n] -= dt_ * (c * curl_component(s_.E, p, a, inv2h) + kFourPi * s_.j_m[ua][p.n]);
            s_.A[ua][p.n] -= c * dt_ * (s_.E[ua][p.n] + diff(s_.A0, p, a, inv2h));
            ok = ok && std::isfinite(s_.B[ua][p.n]) && std::isfinite(s_.A[ua][p.n]);
        }
        if (!ok) finite.store(false, std::memory_order_relaxed);
    });
    ++steps_;
    s_.t += dt_;
    if (!finite) {
        throw SimulationError("non-finite field value after step " + std::to_string(steps_) +
                              " (t = " + std::to_string(s_.t) + "); the run is unstable");
    }
}

void Leapfrog::run(long steps) {
    for (long n = 0; n < steps; ++n) step();
}

fields::FieldState Leapfrog::synchronized() const {
    fields::FieldState out = s_;
    add_electric_rate(out.E, out.A0, 0.5 * dt_);
    return out;
}

}  // namespace sta::sim

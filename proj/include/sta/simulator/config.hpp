#pragma once

#include "sta/fields/grid.hpp"

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace sta::sim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SignatureMode { Minkowski, Euclidean };

/// Travelling wave along 2 pi (mode / box) with Lorenz-gauge potentials.
/// The polarization is projected perpendicular to k and normalised.
struct PlaneWave {
    std::array<int, 3> mode{1, 0, 0};
    std::array<double, 3> polarization{0, 1, 0};
    double amplitude = 1.0;
    double longitudinal = 0.0;  // amplitude of the k-directed potential mode
};

/// Static Gaussian source at the box centre. width <= 0 means 4h.
struct GaussianMonopole {
    double charge = 1.0;
    double width = 0.0;
};

struct GaussianCharge {
    double charge = 1.0;
    double width = 0.0;
};

struct SnapshotFile {
    std::filesystem::path path;
};

using InitialCondition = std::variant<PlaneWave, GaussianMonopole, GaussianCharge, SnapshotFile>;

struct SimConfig {
    std::array<int, 3> cells{32, 32, 32};
    double box = 1.0;  // edge along x; h = box / nx
    double mass = 0.0;
    double c = 1.0;
    double dt = 0.0;  // 0 picks the largest step allowed by the CFL limit
    long steps = 100;
    long cadence = 10;  // diagnostics every `cadence` steps
    InitialCondition initial = PlaneWave{};
    SignatureMode signature = SignatureMode::Minkowski;

    fields::GridSpec grid() const;
    double time_step() const;
    /// Throws ConfigError for c dt / h > 0.5, m c dt > 0.5, or non-positive sizes.
    void validate() const;
};

inline constexpr double kMaxCourant = 0.5;

/// Applies `key = value` lines on top of `cfg`. '#' starts a comment.
/// Keys: grid (N or nx,ny,nz), box, mass, c, dt, steps, cadence, signature
/// (minkowski | euclidean | p,q), initial (plane-wave | gaussian-monopole |
/// gaussian-charge | snapshot), wave-mode, polarization, amplitude,
/// longitudinal-amplitude, charge, width, snapshot. Errors carry source:line.
void apply_config(SimConfig& cfg, std::string_view text, const std::string& source = "<memory>");

/// Reads a config file over `base`. Throws ConfigError if it cannot be opened.
SimConfig load_config(const std::filesystem::path& path, SimConfig base = {});

std::string to_string(SignatureMode mode);

}  // namespace sta::sim

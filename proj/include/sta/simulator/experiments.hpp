#pragma once

#include "sta/algebra/signature.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sta::sim {

/// An experiment whose preconditions fail or whose fit is meaningless.
class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Massive dispersion --------------------------------------------------------

struct DispersionRun {
    int cells = 128;  // along x; the cross-section is 8 x 8
    double box = 1.0;
    int mode = 1;     // k = 2 pi mode / box along x
    double mass = 0.0;
    double c = 1.0;
    double courant = 0.5;
    int periods = 5;  // fit window in predicted oscillations
};

struct DispersionResult {
    double k = 0.0;
    double omega_measured = 0.0;
    double omega_predicted = 0.0;  // c sqrt(k^2 + m^2)
    double relative_error = 0.0;
};

/// Runs a transverse plane wave with the leapfrog scheme and fits the
/// unwrapped phase of its Fourier amplitude by least squares. Refuses fewer
/// than 16 cells per wavelength or fewer than 5 periods.
DispersionResult measure_dispersion(const DispersionRun& run);

/// Independent runs of a sweep, in parallel; results keep the input order.
std::vector<DispersionResult> measure_dispersion(const std::vector<DispersionRun>& runs);

void write_dispersion_csv(std::ostream& out, const std::vector<DispersionResult>& results);

// Driven slab ---------------------------------------------------------------

struct SlabSetup {
    Signature signature = Signature::euclidean();
    int cells = 128;
    double length = 2.0;  // slab [0, length]
    double omega = 0.0;
    double c = 1.0;
};

/// Steady response E(x) e^{i w t} of a slab driven with E(0) = 1. The wave
/// operator i^2 lap + d_t^2 becomes E'' = (w^2 / c^2) / i^2 E, with i^2 the
/// pseudoscalar square of the signature. Decaying problems get a zero-flux
/// far wall; oscillatory ones an exactly outgoing discrete boundary.
std::vector<std::complex<double>> slab_profile(const SlabSetup& setup);

struct EvanescenceReport {
    double omega = 0.0;
    double pseudoscalar_square = 0.0;
    double kappa_fit = 0.0;
    double kappa_expected = 0.0;  // w / c when i^2 = +1, otherwise 0
    double relative_error = 0.0;  // absolute |kappa_fit| when kappa_expected = 0
    double far_distance = 0.0;    // 10 c / w
    int far_nodes = 0;
    double transmitted = 0.0;     // max |E| / |E(0)| beyond far_distance
};

/// Fits log|E| over the first half of the slab. A rising |E| in an
/// evanescent problem throws ExperimentError.
EvanescenceReport euclidean_evanescence(const SlabSetup& setup);

void write_evanescence_csv(std::ostream& out, const std::vector<EvanescenceReport>& reports);

// Monopole Gauss law --------------------------------------------------------

struct MonopoleSetup {
    int cells = 64;  // nodes per edge; the outer layer is held at psi = 0
    double h = 1.0 / 64;
    double charge = 1.0;
    double width = 0.0;  // <= 0 means 4h
    std::vector<int> box_half_cells{22, 28};
    int max_iterations = 20000;
    double tolerance = 1e-10;  // on |residual|_2 / |rhs|_2
};

struct MonopoleReport {
    double charge = 0.0;
    double width = 0.0;
    std::vector<double> box_half_widths;
    std::vector<double> flux;   // outward flux of B = -grad psi through each box
    std::vector<double> ratio;  // flux / (4 pi charge)
    double box_difference = 0.0;  // max relative spread of the fluxes
    int iterations = 0;
    double residual = 0.0;
};

/// Red-black SOR on lap psi = -4 pi rho_m in a Dirichlet cube, then the
/// face-centred flux through each measurement box. Boxes must sit at least
/// five widths from the charge centre and inside the cube.
MonopoleReport monopole_gauss_check(const MonopoleSetup& setup);

void write_monopole_csv(std::ostream& out, const MonopoleReport& report);

// Propagation speed ---------------------------------------------------------

struct PulseSetup {
    int cells = 256;  // along x
    double box = 1.0;
    double width = 0.04;
    double c = 1.0;
    double mass = 0.0;
    double travel = 0.25;  // fraction of the box the pulse is given time to cross
};

/// Speed of the energy centroid of a right-moving Gaussian pulse.
double measure_group_speed(const PulseSetup& setup);

}  // namespace sta::sim

#pragma once

#include <string>
#include <vector>

#include "propagation.hpp"

namespace ero::lpo {

enum class OrbitKind { Planar, Vertical, HaloNorth, HaloSouth };

std::string kind_name(OrbitKind k);
OrbitKind kind_from_name(const std::string& name);
bool is_halo(OrbitKind k);

/// One member of a libration-point-orbit family. The initial state sits on
/// the y=0 plane (z=0 plane for vertical orbits) at epoch 0.
struct PeriodicOrbit {
    OrbitKind kind = OrbitKind::Planar;
    cr3bp::LibrationPoint point = cr3bp::LibrationPoint::L2;
    RotatingState initial_state;
    double period = 0.0;
    double jacobi = 0.0;
    Mat6 monodromy = Mat6::Identity();
    double unstable_eigenvalue = 0.0;  // real eigenvalue > 1
    Vec6 stable_eigvec = Vec6::Zero();
    Vec6 unstable_eigvec = Vec6::Zero();
    double vertical_stability = 0.0;   // Henon index; meaningful for planar orbits
};

struct OrbitFamily {
    OrbitKind kind = OrbitKind::Planar;
    cr3bp::LibrationPoint point = cr3bp::LibrationPoint::L2;
    std::vector<PeriodicOrbit> members;  // strictly decreasing Jacobi constant

    double jacobi_max() const { return members.front().jacobi; }
    double jacobi_min() const { return members.back().jacobi; }
    /// Member whose Jacobi constant is closest to j.
    const PeriodicOrbit& nearest_jacobi(double j) const;
    std::size_t nearest_jacobi_index(double j) const;
};

struct CorrectorOptions {
    int max_iterations = 25;
    double residual_tol = 1e-11;
    double tol = 1e-12;  // integrator tolerance
};

/// Linearised centre-subspace seed near a collinear point. Planar seeds use a
/// position amplitude, vertical ones a z-velocity amplitude.
RotatingState lyapunov_seed(const Constants& c, cr3bp::LibrationPoint point,
                            OrbitKind kind, double amplitude);

struct HaloGuess {
    RotatingState state;
    double period_guess = 0.0;
};

/// Third-order analytic halo approximation; z_amplitude in km.
/// Throws if the amplitude is below the in-plane/out-of-plane existence bound.
HaloGuess halo_seed_richardson(const Constants& c, cr3bp::LibrationPoint point,
                               double z_amplitude_km, bool north);

/// Refine a symmetric periodic-orbit guess with a half-period shooting scheme.
/// Throws on divergence or on a singular correction matrix.
PeriodicOrbit differential_correct(const cr3bp::Propagator& prop,
                                   cr3bp::LibrationPoint point, OrbitKind kind,
                                   const RotatingState& guess,
                                   double period_guess,
                                   const CorrectorOptions& opts = {});

/// Monodromy eigen-structure: fills unstable_eigenvalue and the eigenvector
/// pair. Throws if no real eigenvalue above 1 exists.
void compute_stability(PeriodicOrbit& orbit);

/// Henon vertical stability index of a planar orbit (half trace of the
/// out-of-plane monodromy block).
double vertical_stability_index(const Mat6& monodromy);

struct ContinuationPolicy {
    double initial_step = 0.0;   // 0 = kind-dependent default
    double min_step = 1e-10;
    double max_step = 0.0;       // 0 = kind-dependent default
    double jacobi_stop = 0.0;    // continue until J falls to this value
    std::size_t max_stored = 200;
    std::size_t max_steps = 20000;
};

/// Grow a family from a converged first member by natural-parameter
/// continuation, adapting the step (halve on failure, grow on fast success).
/// Members are stored on a roughly uniform Jacobi grid down to jacobi_stop,
/// with the last member landed on jacobi_stop by bisection.
OrbitFamily continue_family(const cr3bp::Propagator& prop,
                            const PeriodicOrbit& first,
                            const ContinuationPolicy& policy,
                            const CorrectorOptions& copts = {});

struct BifurcationResult {
    PeriodicOrbit orbit;       // planar member at the vertical-critical point
    double amplitude = 0.0;    // continuation parameter (x-offset from the point)
};

/// Locate the vertical-critical planar orbit (halo family origin) by
/// bisection on the vertical stability index along the planar family.
BifurcationResult find_halo_bifurcation(const cr3bp::Propagator& prop,
                                        const OrbitFamily& planar,
                                        const CorrectorOptions& copts = {});

/// Maximum |x - x_L| and |y| excursions over one period (sampled trace).
std::pair<double, double> inplane_extent(const cr3bp::Propagator& prop,
                                         const PeriodicOrbit& orbit);

/// Maximum z over one period (signed: positive for northern halos).
double max_z_excursion(const cr3bp::Propagator& prop, const PeriodicOrbit& orbit);

}  // namespace ero::lpo

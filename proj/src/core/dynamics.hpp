#pragma once

#include "constants.hpp"
#include "state.hpp"

namespace ero::cr3bp {

/// Locations and Jacobi constants of the five equilibrium points.
struct EquilibriumSet {
    double x_l1 = 0.0;
    double x_l2 = 0.0;
    double x_l3 = 0.0;
    Eigen::Vector2d l4 = Eigen::Vector2d::Zero();
    Eigen::Vector2d l5 = Eigen::Vector2d::Zero();
    double jacobi_l1 = 0.0;
    double jacobi_l2 = 0.0;
    double jacobi_l3 = 0.0;
    double jacobi_l4 = 0.0;
    double jacobi_l5 = 0.0;

    double collinear_x(int point) const;  // point: 1, 2 or 3
    double jacobi(int point) const;
};

enum class LibrationPoint { L1 = 1, L2 = 2 };

/// Rotating-frame equations of motion; `deriv` receives d(state)/dt.
void state_derivative(double mu, const Vec6& state, Vec6& deriv);

/// 6x6 Jacobian of the flow field at `state` (for the variational equations).
Mat6 flow_jacobian(double mu, const Vec6& state);

/// Jacobi integral J = 2*U - v^2 in the usual normalised convention.
double jacobi_constant(double mu, const Vec6& state);

/// Effective potential U(x,y,z) including the rotation term.
double effective_potential(double mu, const Vec3& pos);

/// Rotating-frame acceleration magnitude at rest (residual check for equilibria).
double rest_acceleration(double mu, const Vec3& pos);

/// Solve for all five equilibrium points. Throws on non-convergence.
EquilibriumSet equilibrium_points(double mu);

/// Distances to the two primaries.
void primary_distances(double mu, const Vec3& pos, double& r_sun, double& r_earth);

}  // namespace ero::cr3bp

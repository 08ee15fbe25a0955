#pragma once

#include <Eigen/Dense>

namespace ero {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Phase-space state in the barycentric rotating frame, nondimensional units.
/// The epoch t ties the state to the Sun-Earth line orientation.
struct RotatingState {
    Vec6 v = Vec6::Zero();  // x, y, z, vx, vy, vz
    double t = 0.0;

    double x() const { return v[0]; }
    double y() const { return v[1]; }
    double z() const { return v[2]; }
    double vx() const { return v[3]; }
    double vy() const { return v[4]; }
    double vz() const { return v[5]; }

    Vec3 position() const { return v.head<3>(); }
    Vec3 velocity() const { return v.tail<3>(); }

    static RotatingState make(double x, double y, double z, double vx,
                              double vy, double vz, double t = 0.0) {
        RotatingState s;
        s.v << x, y, z, vx, vy, vz;
        s.t = t;
        return s;
    }
};

/// Heliocentric inertial Cartesian state in physical units (km, km/s).
struct HelioState {
    Vec3 r_km = Vec3::Zero();
    Vec3 v_kms = Vec3::Zero();
    double mjd = 0.0;
};

}  // namespace ero

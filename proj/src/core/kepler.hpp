#pragma once

#include "state.hpp"

namespace ero::twobody {

/// Osculating Keplerian elements about a single attractor (km, rad).
/// Mean anomaly is referred to `epoch_mjd`.
struct Elements {
    double a_km = 0.0;
    double e = 0.0;
    double i_rad = 0.0;
    double raan_rad = 0.0;  // zero by convention when the orbit is equatorial
    double argp_rad = 0.0;
    double ma_rad = 0.0;
    double epoch_mjd = 0.0;

    double periapsis_km() const { return a_km * (1.0 - e); }
    double apoapsis_km() const { return a_km * (1.0 + e); }
};

/// Eccentric anomaly from mean anomaly, elliptic case. Newton iteration,
/// converged to 1e-13 rad.
double solve_kepler(double mean_anom_rad, double e);

double period_s(double mu_km3s2, double a_km);
double mean_motion_rad_s(double mu_km3s2, double a_km);

Elements elements_from_state(double mu_km3s2, const Vec3& r_km, const Vec3& v_kms,
                             double epoch_mjd);

/// Cartesian state at `mjd` from elements (two-body mean-anomaly advance).
void state_at(double mu_km3s2, const Elements& el, double mjd, Vec3& r_km,
              Vec3& v_kms);

/// True anomaly at `mjd` (useful for apsis bookkeeping).
double true_anomaly_at(double mu_km3s2, const Elements& el, double mjd);

/// Universal-variable two-body propagation of a Cartesian state by dt seconds.
/// Valid for any conic; used for solution replay checks.
void propagate_universal(double mu_km3s2, const Vec3& r0_km, const Vec3& v0_kms,
                         double dt_s, Vec3& r_km, Vec3& v_kms);

}  // namespace ero::twobody

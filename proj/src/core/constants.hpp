#pragma once

#include <cmath>

namespace ero {

/// Physical and normalisation constants for the Sun-Earth rotating-frame model.
///
/// Nondimensional units: the Sun-Earth distance is 1, the angular rate of the
/// frame is 1, and the combined gravitational parameter of the primaries is 1.
/// One nondimensional time unit therefore equals 1/(2*pi) of the Earth period.
struct Constants {
    double mu = 3.0032080443e-6;          ///< mass ratio m2/(m1+m2), Moon excluded
    double mu_sun_km3s2 = 1.32712440018e11;  ///< Sun GM [km^3/s^2]
    double au_km = 1.495978707e8;         ///< length unit [km]
    double earth_ref_longitude_rad = 0.0; ///< Earth longitude at the reference epoch
    double ref_epoch_mjd = 51544.5;       ///< J2000 as MJD (TDB)

    /// Combined GM of the primaries [km^3/s^2]; mu_sun is (1-mu) of the total.
    double mu_total_km3s2() const { return mu_sun_km3s2 / (1.0 - mu); }

    /// Time unit [s]: 1 nondim time = time_unit_s seconds.
    double time_unit_s() const {
        return std::sqrt(au_km * au_km * au_km / mu_total_km3s2());
    }

    /// Earth orbital period [s] (= 2*pi time units).
    double earth_period_s() const { return 2.0 * M_PI * time_unit_s(); }

    /// Velocity unit [km/s].
    double velocity_unit_kms() const { return au_km / time_unit_s(); }

    // unit conversions
    double km_to_nd(double km) const { return km / au_km; }
    double nd_to_km(double nd) const { return nd * au_km; }
    double kms_to_nd(double kms) const { return kms / velocity_unit_kms(); }
    double nd_to_kms(double nd) const { return nd * velocity_unit_kms(); }
    double sec_to_nd(double s) const { return s / time_unit_s(); }
    double nd_to_sec(double nd) const { return nd * time_unit_s(); }
    double days_to_nd(double d) const { return sec_to_nd(d * 86400.0); }
    double nd_to_days(double nd) const { return nd_to_sec(nd) / 86400.0; }
    double years_to_nd(double y) const { return 2.0 * M_PI * y; }
    double nd_to_years(double nd) const { return nd / (2.0 * M_PI); }

    /// Nondim epoch of a calendar instant given as MJD.
    double mjd_to_epoch(double mjd) const {
        return sec_to_nd((mjd - ref_epoch_mjd) * 86400.0);
    }
    double epoch_to_mjd(double t_nd) const {
        return ref_epoch_mjd + nd_to_sec(t_nd) / 86400.0;
    }

    /// Rotating-frame phase of the Sun-Earth line at nondim epoch t.
    double earth_phase(double t_nd) const {
        return earth_ref_longitude_rad + t_nd;
    }
};

}  // namespace ero

#pragma once

#include <string>

#include "constants.hpp"
#include "state.hpp"

namespace ero {

/// Circular-Earth kinematic transform: barycentric rotating frame
/// (nondimensional) to Sun-centred inertial frame (km, km/s). The epoch of
/// the rotating state fixes the Sun-Earth line orientation.
HelioState rotating_to_heliocentric(const Constants& c, const RotatingState& s);

/// Exact inverse of rotating_to_heliocentric.
RotatingState heliocentric_to_rotating(const Constants& c, const HelioState& h);

/// Earth's heliocentric state at a nondim epoch under the circular model.
HelioState earth_heliocentric(const Constants& c, double t_nd);

namespace dates {

/// MJD from an ISO-8601 date or date-time string (UTC-agnostic calendar math).
double mjd_from_iso(const std::string& iso);

/// ISO-8601 date string (days rounded down) from an MJD.
std::string iso_from_mjd(double mjd);

double mjd_from_ymd(int year, int month, int day, double day_fraction = 0.0);
void ymd_from_mjd(double mjd, int& year, int& month, int& day);

}  // namespace dates

}  // namespace ero

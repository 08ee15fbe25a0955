#include "frames.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ero {

namespace {

Eigen::Matrix3d rotation_z(double angle) {
    Eigen::Matrix3d r;
    const double c = std::cos(angle), s = std::sin(angle);
    r << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
    return r;
}

}  // namespace

HelioState rotating_to_heliocentric(const Constants& c, const RotatingState& s) {
    const double theta = c.earth_phase(s.t);
    const Eigen::Matrix3d rot = rotation_z(theta);

    Vec3 pos_rel = s.position();
    pos_rel[0] += c.mu;  // shift origin from barycentre to the Sun
    const Vec3 vel_rel = s.velocity();
    // inertial velocity: transport term omega x r with omega = z-hat
    const Vec3 transport(-pos_rel[1], pos_rel[0], 0.0);

    HelioState h;
    h.r_km = rot * pos_rel * c.au_km;
    h.v_kms = rot * (vel_rel + transport) * c.velocity_unit_kms();
    h.mjd = c.epoch_to_mjd(s.t);
    return h;
}

RotatingState heliocentric_to_rotating(const Constants& c, const HelioState& h) {
    const double t = c.mjd_to_epoch(h.mjd);
    const double theta = c.earth_phase(t);
    const Eigen::Matrix3d rot_inv = rotation_z(-theta);

    const Vec3 pos_rel = rot_inv * h.r_km / c.au_km;
    const Vec3 vel_in = rot_inv * h.v_kms / c.velocity_unit_kms();
    const Vec3 transport(-pos_rel[1], pos_rel[0], 0.0);

    RotatingState s;
    s.v.head<3>() = pos_rel;
    s.v[0] -= c.mu;
    s.v.tail<3>() = vel_in - transport;
    s.t = t;
    return s;
}

HelioState earth_heliocentric(const Constants& c, double t_nd) {
    RotatingState earth = RotatingState::make(1.0 - c.mu, 0, 0, 0, 0, 0, t_nd);
    return rotating_to_heliocentric(c, earth);
}

namespace dates {

double mjd_from_ymd(int year, int month, int day, double day_fraction) {
    // Fliegel-Van Flandern Julian day number (valid for Gregorian dates)
    const long a = (14 - month) / 12;
    const long y = year + 4800 - a;
    const long m = month + 12 * a - 3;
    const long jdn = day + (153 * m + 2) / 5 + 365 * y + y / 4 - y / 100 +
                     y / 400 - 32045;
    return static_cast<double>(jdn) - 2400001.0 + day_fraction;
}

void ymd_from_mjd(double mjd, int& year, int& month, int& day) {
    const long jdn = static_cast<long>(std::floor(mjd)) + 2400001L;
    long a = jdn + 32044;
    long b = (4 * a + 3) / 146097;
    long c = a - 146097 * b / 4;
    long d = (4 * c + 3) / 1461;
    long e = c - 1461 * d / 4;
    long m = (5 * e + 2) / 153;
    day = static_cast<int>(e - (153 * m + 2) / 5 + 1);
    month = static_cast<int>(m + 3 - 12 * (m / 10));
    year = static_cast<int>(100 * b + d - 4800 + m / 10);
}

double mjd_from_iso(const std::string& iso) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0;
    double sec = 0.0;
    int n = std::sscanf(iso.c_str(), "%d-%d-%dT%d:%d:%lf", &y, &mo, &d, &h, &mi, &sec);
    if (n < 3) throw std::invalid_argument("not an ISO-8601 date: " + iso);
    const double frac = (h * 3600.0 + mi * 60.0 + sec) / 86400.0;
    return mjd_from_ymd(y, mo, d, frac);
}

std::string iso_from_mjd(double mjd) {
    int y, mo, d;
    ymd_from_mjd(mjd, y, mo, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, mo, d);
    return buf;
}

}  // namespace dates

}  // namespace ero

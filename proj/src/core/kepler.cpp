#include "kepler.hpp"

#include <cmath>
#include <stdexcept>

namespace ero::twobody {

namespace {

double wrap_2pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    return a < 0.0 ? a + 2.0 * M_PI : a;
}

constexpr double kEquatorialTol = 1e-11;

}  // namespace

double solve_kepler(double m, double e) {
    if (e < 0.0 || e >= 1.0)
        throw std::domain_error("solve_kepler requires an elliptic eccentricity");
    m = std::remainder(m, 2.0 * M_PI);
    double ea = (e < 0.8) ? m : M_PI * (m >= 0 ? 1.0 : -1.0);
    for (int i = 0; i < 60; ++i) {
        const double f = ea - e * std::sin(ea) - m;
        const double fp = 1.0 - e * std::cos(ea);
        const double d = f / fp;
        ea -= d;
        if (std::abs(d) < 1e-13) break;
    }
    return ea;
}

double mean_motion_rad_s(double mu, double a_km) {
    return std::sqrt(mu / (a_km * a_km * a_km));
}

double period_s(double mu, double a_km) {
    return 2.0 * M_PI / mean_motion_rad_s(mu, a_km);
}

Elements elements_from_state(double mu, const Vec3& r, const Vec3& v, double mjd) {
    const double rn = r.norm();
    const double vn2 = v.squaredNorm();
    const Vec3 h = r.cross(v);
    const double hn = h.norm();
    if (hn == 0.0) throw std::domain_error("degenerate rectilinear orbit");

    const Vec3 evec = (v.cross(h) / mu) - r / rn;
    const double e = evec.norm();
    const double energy = vn2 / 2.0 - mu / rn;
    if (energy >= 0.0)
        throw std::domain_error("state is not elliptic about the attractor");
    const double a = -mu / (2.0 * energy);
    const double inc = std::acos(std::clamp(h[2] / hn, -1.0, 1.0));

    const Vec3 node(-h[1], h[0], 0.0);
    const double nn = node.norm();

    double raan, argp, nu;
    if (nn < kEquatorialTol * hn) {
        // equatorial: node undefined, measure periapsis longitude from +x
        raan = 0.0;
        argp = std::atan2(evec[1], evec[0]);
        if (h[2] < 0.0) argp = -argp;  // retrograde equatorial
    } else {
        raan = std::atan2(node[1], node[0]);
        argp = std::acos(std::clamp(node.dot(evec) / (nn * e), -1.0, 1.0));
        if (evec[2] < 0.0) argp = 2.0 * M_PI - argp;
    }
    if (e > 1e-12) {
        nu = std::acos(std::clamp(evec.dot(r) / (e * rn), -1.0, 1.0));
        if (r.dot(v) < 0.0) nu = 2.0 * M_PI - nu;
    } else {
        // circular: anomaly measured from the node line (or +x if equatorial)
        const Vec3 refdir = (nn < kEquatorialTol * hn) ? Vec3(1, 0, 0) : Vec3(node / nn);
        nu = std::acos(std::clamp(refdir.dot(r) / rn, -1.0, 1.0));
        if (refdir.cross(r).dot(h) < 0.0) nu = 2.0 * M_PI - nu;
    }

    const double ea = 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(nu / 2.0),
                                       std::sqrt(1.0 + e) * std::cos(nu / 2.0));
    Elements el;
    el.a_km = a;
    el.e = e;
    el.i_rad = inc;
    el.raan_rad = wrap_2pi(raan);
    el.argp_rad = wrap_2pi(argp);
    el.ma_rad = wrap_2pi(ea - e * std::sin(ea));
    el.epoch_mjd = mjd;
    return el;
}

double true_anomaly_at(double mu, const Elements& el, double mjd) {
    const double m = el.ma_rad + mean_motion_rad_s(mu, el.a_km) *
                                     (mjd - el.epoch_mjd) * 86400.0;
    const double ea = solve_kepler(m, el.e);
    return 2.0 * std::atan2(std::sqrt(1.0 + el.e) * std::sin(ea / 2.0),
                            std::sqrt(1.0 - el.e) * std::cos(ea / 2.0));
}

void state_at(double mu, const Elements& el, double mjd, Vec3& r, Vec3& v) {
    const double nu = true_anomaly_at(mu, el, mjd);
    const double p = el.a_km * (1.0 - el.e * el.e);
    const double rn = p / (1.0 + el.e * std::cos(nu));

    // perifocal frame
    const Vec3 r_pf(rn * std::cos(nu), rn * std::sin(nu), 0.0);
    const double vscale = std::sqrt(mu / p);
    const Vec3 v_pf(-vscale * std::sin(nu), vscale * (el.e + std::cos(nu)), 0.0);

    const Eigen::AngleAxisd r3_raan(el.raan_rad, Vec3::UnitZ());
    const Eigen::AngleAxisd r1_inc(el.i_rad, Vec3::UnitX());
    const Eigen::AngleAxisd r3_argp(el.argp_rad, Vec3::UnitZ());
    const Eigen::Matrix3d rot = (r3_raan * r1_inc * r3_argp).toRotationMatrix();

    r = rot * r_pf;
    v = rot * v_pf;
}

namespace {

// Stumpff functions with series fallback near zero argument.
void stumpff(double z, double& c2, double& c3) {
    if (z > 1e-7) {
        const double s = std::sqrt(z);
        c2 = (1.0 - std::cos(s)) / z;
        c3 = (s - std::sin(s)) / (z * s);
    } else if (z < -1e-7) {
        const double s = std::sqrt(-z);
        c2 = (std::cosh(s) - 1.0) / (-z);
        c3 = (std::sinh(s) - s) / (-z * s);
    } else {
        c2 = 1.0 / 2.0 - z / 24.0 + z * z / 720.0;
        c3 = 1.0 / 6.0 - z / 120.0 + z * z / 5040.0;
    }
}

}  // namespace

void propagate_universal(double mu, const Vec3& r0, const Vec3& v0, double dt,
                         Vec3& r, Vec3& v) {
    if (dt == 0.0) {
        r = r0;
        v = v0;
        return;
    }
    const double rn0 = r0.norm();
    const double vr0 = r0.dot(v0) / rn0;
    const double alpha = 2.0 / rn0 - v0.squaredNorm() / mu;  // 1/a
    const double smu = std::sqrt(mu);

    double chi = (alpha > 0.0) ? smu * std::abs(alpha) * dt
                               : (dt >= 0 ? 1.0 : -1.0) * smu * 1e-3;
    double c2 = 0, c3 = 0, rnorm = rn0;
    for (int i = 0; i < 120; ++i) {
        const double chi2 = chi * chi;
        const double z = alpha * chi2;
        stumpff(z, c2, c3);
        const double f = rn0 * vr0 / smu * chi2 * c2 +
                         (1.0 - alpha * rn0) * chi2 * chi * c3 + rn0 * chi -
                         smu * dt;
        rnorm = rn0 * vr0 / smu * chi * (1.0 - z * c3) +
                (1.0 - alpha * rn0) * chi2 * c2 + rn0;
        const double d = f / rnorm;
        chi -= d;
        if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(chi))) break;
    }
    const double chi2 = chi * chi;
    const double z = alpha * chi2;
    stumpff(z, c2, c3);

    const double f = 1.0 - chi2 / rn0 * c2;
    const double g = dt - chi2 * chi / smu * c3;
    r = f * r0 + g * v0;
    const double rn = r.norm();
    const double gdot = 1.0 - chi2 / rn * c2;
    const double fdot = smu / (rn * rn0) * (z * c3 - 1.0) * chi;
    v = fdot * r0 + gdot * v0;
}

}  // namespace ero::twobody

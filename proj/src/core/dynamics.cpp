#include "dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace ero::cr3bp {

double EquilibriumSet::collinear_x(int point) const {
    switch (point) {
        case 1: return x_l1;
        case 2: return x_l2;
        case 3: return x_l3;
        default: throw std::invalid_argument("collinear point index must be 1, 2 or 3");
    }
}

double EquilibriumSet::jacobi(int point) const {
    switch (point) {
        case 1: return jacobi_l1;
        case 2: return jacobi_l2;
        case 3: return jacobi_l3;
        case 4: return jacobi_l4;
        case 5: return jacobi_l5;
        default: throw std::invalid_argument("point index must be in 1..5");
    }
}

void primary_distances(double mu, const Vec3& pos, double& r_sun, double& r_earth) {
    const double dx1 = pos[0] + mu;        // Sun at (-mu, 0, 0)
    const double dx2 = pos[0] - 1.0 + mu;  // Earth at (1-mu, 0, 0)
    r_sun = std::sqrt(dx1 * dx1 + pos[1] * pos[1] + pos[2] * pos[2]);
    r_earth = std::sqrt(dx2 * dx2 + pos[1] * pos[1] + pos[2] * pos[2]);
}

void state_derivative(double mu, const Vec6& s, Vec6& d) {
    const double x = s[0], y = s[1], z = s[2];
    const double dx1 = x + mu;
    const double dx2 = x - 1.0 + mu;
    const double r1sq = dx1 * dx1 + y * y + z * z;
    const double r2sq = dx2 * dx2 + y * y + z * z;
    const double r13 = r1sq * std::sqrt(r1sq);
    const double r23 = r2sq * std::sqrt(r2sq);
    const double c1 = (1.0 - mu) / r13;
    const double c2 = mu / r23;

    d[0] = s[3];
    d[1] = s[4];
    d[2] = s[5];
    d[3] = 2.0 * s[4] + x - c1 * dx1 - c2 * dx2;
    d[4] = -2.0 * s[3] + y - c1 * y - c2 * y;
    d[5] = -c1 * z - c2 * z;
}

Mat6 flow_jacobian(double mu, const Vec6& s) {
    const double x = s[0], y = s[1], z = s[2];
    const double dx1 = x + mu;
    const double dx2 = x - 1.0 + mu;
    const double r1sq = dx1 * dx1 + y * y + z * z;
    const double r2sq = dx2 * dx2 + y * y + z * z;
    const double r1 = std::sqrt(r1sq), r2 = std::sqrt(r2sq);
    const double r13 = r1sq * r1, r23 = r2sq * r2;
    const double r15 = r13 * r1sq, r25 = r23 * r2sq;
    const double m1 = 1.0 - mu, m2 = mu;

    // second partials of the effective potential
    const double uxx = 1.0 - m1 / r13 - m2 / r23 + 3.0 * m1 * dx1 * dx1 / r15 +
                       3.0 * m2 * dx2 * dx2 / r25;
    const double uyy = 1.0 - m1 / r13 - m2 / r23 + 3.0 * m1 * y * y / r15 +
                       3.0 * m2 * y * y / r25;
    const double uzz = -m1 / r13 - m2 / r23 + 3.0 * m1 * z * z / r15 +
                       3.0 * m2 * z * z / r25;
    const double uxy = 3.0 * m1 * dx1 * y / r15 + 3.0 * m2 * dx2 * y / r25;
    const double uxz = 3.0 * m1 * dx1 * z / r15 + 3.0 * m2 * dx2 * z / r25;
    const double uyz = 3.0 * m1 * y * z / r15 + 3.0 * m2 * y * z / r25;

    Mat6 a = Mat6::Zero();
    a(0, 3) = a(1, 4) = a(2, 5) = 1.0;
    a(3, 0) = uxx; a(3, 1) = uxy; a(3, 2) = uxz;
    a(4, 0) = uxy; a(4, 1) = uyy; a(4, 2) = uyz;
    a(5, 0) = uxz; a(5, 1) = uyz; a(5, 2) = uzz;
    a(3, 4) = 2.0;
    a(4, 3) = -2.0;
    return a;
}

double effective_potential(double mu, const Vec3& pos) {
    double r1, r2;
    primary_distances(mu, pos, r1, r2);
    return 0.5 * (pos[0] * pos[0] + pos[1] * pos[1]) + (1.0 - mu) / r1 + mu / r2;
}

double jacobi_constant(double mu, const Vec6& s) {
    const double v2 = s[3] * s[3] + s[4] * s[4] + s[5] * s[5];
    return 2.0 * effective_potential(mu, s.head<3>()) - v2;
}

double rest_acceleration(double mu, const Vec3& pos) {
    Vec6 s = Vec6::Zero();
    s.head<3>() = pos;
    Vec6 d;
    state_derivative(mu, s, d);
    return d.tail<3>().norm();
}

namespace {

// Collinear equilibrium condition on the x axis.
double axis_force(double mu, double x) {
    const double dx1 = x + mu;
    const double dx2 = x - 1.0 + mu;
    return x - (1.0 - mu) * dx1 / (std::abs(dx1) * dx1 * dx1) -
           mu * dx2 / (std::abs(dx2) * dx2 * dx2);
}

double bisect_root(double mu, double lo, double hi) {
    double flo = axis_force(mu, lo);
    double fhi = axis_force(mu, hi);
    if (flo * fhi > 0.0)
        throw std::runtime_error("collinear point not bracketed (bad mass ratio?)");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = axis_force(mu, mid);
        if (fm == 0.0 || hi - lo < 1e-16) return mid;
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

EquilibriumSet equilibrium_points(double mu) {
    if (!(mu > 0.0 && mu < 0.5))
        throw std::invalid_argument("mass ratio must lie in (0, 0.5)");

    EquilibriumSet eq;
    const double hill = std::cbrt(mu / 3.0);
    // brackets sized generously around the Hill-radius guesses
    eq.x_l1 = bisect_root(mu, 1.0 - mu - 3.0 * hill, 1.0 - mu - 1e-9);
    eq.x_l2 = bisect_root(mu, 1.0 - mu + 1e-9, 1.0 - mu + 3.0 * hill);
    eq.x_l3 = bisect_root(mu, -2.0, -mu - 1e-9);
    eq.l4 << 0.5 - mu, std::sqrt(3.0) / 2.0;
    eq.l5 << 0.5 - mu, -std::sqrt(3.0) / 2.0;

    auto jac_at = [mu](double x, double y) {
        Vec6 s = Vec6::Zero();
        s[0] = x;
        s[1] = y;
        return jacobi_constant(mu, s);
    };
    eq.jacobi_l1 = jac_at(eq.x_l1, 0.0);
    eq.jacobi_l2 = jac_at(eq.x_l2, 0.0);
    eq.jacobi_l3 = jac_at(eq.x_l3, 0.0);
    eq.jacobi_l4 = jac_at(eq.l4[0], eq.l4[1]);
    eq.jacobi_l5 = jac_at(eq.l5[0], eq.l5[1]);
    return eq;
}

}  // namespace ero::cr3bp

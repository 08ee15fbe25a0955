#include "propagation.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace odeint = boost::numeric::odeint;

namespace ero::cr3bp {

namespace {

using Arr6 = std::array<double, 6>;
using Arr42 = std::array<double, 42>;

// Integration always runs in positive internal time; `dir` flips the field
// for backward arcs so the controlled stepper never sees a negative step.
struct FlowSystem {
    double mu;
    double dir;
    void operator()(const Arr6& x, Arr6& dxdt, double) const {
        Vec6 s = Eigen::Map<const Vec6>(x.data());
        Vec6 d;
        state_derivative(mu, s, d);
        Eigen::Map<Vec6>(dxdt.data()) = dir * d;
    }
};

// State plus the 36 entries of the state transition matrix (column-major).
struct VariationalSystem {
    double mu;
    double dir;
    void operator()(const Arr42& x, Arr42& dxdt, double) const {
        Vec6 s = Eigen::Map<const Vec6>(x.data());
        Vec6 d;
        state_derivative(mu, s, d);
        Eigen::Map<Vec6>(dxdt.data()) = dir * d;
        const Mat6 a = flow_jacobian(mu, s);
        Eigen::Map<const Mat6> phi(x.data() + 6);
        Eigen::Map<Mat6> dphi(dxdt.data() + 6);
        dphi = dir * (a * phi);
    }
};

template <class Arr>
void check_singularity(double mu, const Arr& x, double radius) {
    Vec3 pos(x[0], x[1], x[2]);
    double r1, r2;
    primary_distances(mu, pos, r1, r2);
    if (r1 < radius || r2 < radius)
        throw std::runtime_error("propagation entered a primary singularity guard radius");
}

template <class Arr, class Sys>
struct Driver {
    Sys sys;
    double mu;
    PropagateOptions opts;

    using Stepper = odeint::controlled_runge_kutta<odeint::runge_kutta_fehlberg78<Arr>>;

    Stepper make_stepper() const {
        return odeint::make_controlled(opts.abs_tol, opts.rel_tol,
                                       odeint::runge_kutta_fehlberg78<Arr>());
    }

    // Advance x by `span` (positive internal time), invoking `on_step` with
    // (tau_prev, x_prev, tau, x) after every accepted step. on_step returning
    // false stops the integration early.
    template <class OnStep>
    void run(Arr& x, double span, OnStep&& on_step) const {
        if (span <= 0.0) return;
        auto stepper = make_stepper();
        double tau = 0.0;
        double dt = std::min(std::abs(opts.initial_step), span);
        while (tau < span * (1.0 - 1e-15)) {
            dt = std::min(dt, span - tau);
            Arr x_prev = x;
            const double tau_prev = tau;
            int rejects = 0;
            while (stepper.try_step(sys, x, tau, dt) == odeint::fail) {
                if (++rejects > 500 || std::abs(dt) < 1e-16)
                    throw std::runtime_error("integrator step size underflow");
            }
            ero::cr3bp::check_singularity(mu, x, opts.singularity_radius);
            if (!on_step(tau_prev, x_prev, tau, x)) return;
        }
    }

    // Integrate a copy of x_from forward by `span` with the same tolerances.
    Arr flow_from(const Arr& x_from, double span) const {
        Arr x = x_from;
        if (span <= 0.0) return x;
        auto stepper = make_stepper();
        odeint::integrate_adaptive(stepper, sys, x, 0.0, span,
                                   std::min(std::abs(opts.initial_step), span));
        return x;
    }
};

template <class Arr>
Vec6 head6(const Arr& x) {
    return Eigen::Map<const Vec6>(x.data());
}

// Safeguarded secant/bisection on the event function along the flow from the
// bracket start. Returns the refined offset within [0, span].
template <class Drv, class Arr>
double refine_root(const Drv& drv, const Event& ev, const Arr& x_a, double span,
                   double g_a, double g_b) {
    double lo = 0.0, hi = span;
    double flo = g_a, fhi = g_b;
    for (int i = 0; i < 90; ++i) {
        if (hi - lo < 1e-14 * std::max(1.0, std::abs(span))) break;
        double cand;
        if (i % 2 == 0 && fhi != flo) {
            cand = lo - flo * (hi - lo) / (fhi - flo);
            const double margin = 1e-3 * (hi - lo);
            if (!(cand > lo + margin && cand < hi - margin))
                cand = 0.5 * (lo + hi);
        } else {
            cand = 0.5 * (lo + hi);
        }
        const Arr x_c = drv.flow_from(x_a, cand);
        const double fc = ev.value(head6(x_c));
        if (fc == 0.0) return cand;
        if (flo * fc < 0.0) {
            hi = cand;
            fhi = fc;
        } else {
            lo = cand;
            flo = fc;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Trajectory Propagator::propagate(const RotatingState& s0, double dt,
                                 const PropagateOptions& opts) const {
    Trajectory out;
    if (opts.record) out.samples.push_back(s0);
    if (dt == 0.0) {
        out.final = s0;
        return out;
    }
    const double dir = dt > 0.0 ? 1.0 : -1.0;
    Driver<Arr6, FlowSystem> drv{{constants_.mu, dir}, constants_.mu, opts};
    Arr6 x;
    Eigen::Map<Vec6>(x.data()) = s0.v;
    drv.run(x, std::abs(dt), [&](double, const Arr6&, double tau, const Arr6& xc) {
        if (opts.record) {
            RotatingState s;
            s.v = head6(xc);
            s.t = s0.t + dir * tau;
            out.samples.push_back(s);
        }
        return true;
    });
    out.final.v = head6(x);
    out.final.t = s0.t + dt;
    if (opts.record) out.samples.back() = out.final;
    return out;
}

RotatingState Propagator::propagate_final(const RotatingState& s0, double dt,
                                          const PropagateOptions& opts) const {
    return propagate(s0, dt, opts).final;
}

std::pair<RotatingState, Mat6> Propagator::propagate_with_stm(
    const RotatingState& s0, double dt, const PropagateOptions& opts) const {
    Arr42 x{};
    Eigen::Map<Vec6>(x.data()) = s0.v;
    Eigen::Map<Mat6>(x.data() + 6) = Mat6::Identity();
    if (dt != 0.0) {
        const double dir = dt > 0.0 ? 1.0 : -1.0;
        Driver<Arr42, VariationalSystem> drv{{constants_.mu, dir}, constants_.mu, opts};
        drv.run(x, std::abs(dt), [](double, const Arr42&, double, const Arr42&) {
            return true;
        });
    }
    RotatingState sf;
    sf.v = head6(x);
    sf.t = s0.t + dt;
    Mat6 stm = Eigen::Map<const Mat6>(x.data() + 6);
    return {sf, stm};
}

namespace {

template <class Arr, class Sys>
std::optional<std::pair<EventResult, Mat6>> event_core(
    const Constants& constants, const RotatingState& s0, const Event& ev,
    double t_max, const PropagateOptions& opts, bool with_stm) {
    if (t_max == 0.0) return std::nullopt;
    const double dir = t_max > 0.0 ? 1.0 : -1.0;
    Driver<Arr, Sys> drv{{constants.mu, dir}, constants.mu, opts};

    Arr x{};
    Eigen::Map<Vec6>(x.data()) = s0.v;
    if constexpr (std::is_same_v<Arr, Arr42>)
        Eigen::Map<Mat6>(x.data() + 6) = Mat6::Identity();

    std::optional<std::pair<EventResult, Mat6>> found;
    double g_prev = ev.value(s0.v);
    drv.run(x, std::abs(t_max), [&](double tau_prev, const Arr& x_prev,
                                    double tau, const Arr& x_now) {
        const double g_now = ev.value(head6(x_now));
        const bool sign_change = g_prev * g_now < 0.0 ||
                                 (g_prev != 0.0 && g_now == 0.0);
        // signed-direction filter uses the *time* direction of the crossing
        const double dg = g_now - g_prev;
        const bool dir_ok = ev.direction == 0 || dg * ev.direction > 0.0;
        if (sign_change && dir_ok) {
            const double off = refine_root(drv, ev, x_prev, tau - tau_prev,
                                           g_prev, g_now);
            const Arr x_root = drv.flow_from(x_prev, off);
            const Vec6 root_state = head6(x_root);
            if (!ev.gate || ev.gate(root_state)) {
                EventResult res;
                res.state.v = root_state;
                res.elapsed = dir * (tau_prev + off);
                res.state.t = s0.t + res.elapsed;
                Mat6 stm = Mat6::Identity();
                if constexpr (std::is_same_v<Arr, Arr42>)
                    stm = Eigen::Map<const Mat6>(x_root.data() + 6);
                found = {res, stm};
                return false;
            }
        }
        g_prev = g_now;
        return true;
    });
    (void)with_stm;
    return found;
}

}  // namespace

std::optional<EventResult> Propagator::propagate_to_event(
    const RotatingState& s0, const Event& ev, double t_max,
    const PropagateOptions& opts) const {
    auto r = event_core<Arr6, FlowSystem>(constants_, s0, ev, t_max, opts, false);
    if (!r) return std::nullopt;
    return r->first;
}

std::optional<std::pair<EventResult, Mat6>> Propagator::propagate_to_event_with_stm(
    const RotatingState& s0, const Event& ev, double t_max,
    const PropagateOptions& opts) const {
    return event_core<Arr42, VariationalSystem>(constants_, s0, ev, t_max, opts, true);
}

Event sun_line_section(double mu, double angle, int direction) {
    const double c = std::cos(angle), s = std::sin(angle);
    Event ev;
    ev.value = [mu, c, s](const Vec6& st) {
        // angle measured about the Sun; zero on the section plane
        const double ux = st[0] + mu;
        const double uy = st[1];
        return uy * c - ux * s;
    };
    ev.gate = [mu, c, s](const Vec6& st) {
        const double ux = st[0] + mu;
        const double uy = st[1];
        return ux * c + uy * s > 0.0;  // stay on the half-plane of `angle`
    };
    ev.direction = direction;
    return ev;
}

}  // namespace ero::cr3bp

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dynamics.hpp"
#include "state.hpp"

namespace ero::cr3bp {

struct PropagateOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    double initial_step = 1e-3;       // magnitude; sign follows dt
    double singularity_radius = 1e-6; // abort below this distance to a primary
    bool record = false;              // keep every accepted step
};

struct Trajectory {
    std::vector<RotatingState> samples;  // includes endpoints when recording
    RotatingState final;
};

/// Signed event function evaluated on the state; a root marks the event.
/// `gate` (optional) must also be satisfied at the root for it to count.
struct Event {
    std::function<double(const Vec6&)> value;
    std::function<bool(const Vec6&)> gate;
    int direction = 0;  // +1 rising, -1 falling, 0 either
};

struct EventResult {
    RotatingState state;   // refined state at the crossing
    double elapsed = 0.0;  // signed time from the initial epoch
};

class Propagator {
  public:
    explicit Propagator(const Constants& c) : constants_(c) {}

    /// Integrate for a signed duration dt. Throws on singularity passage.
    Trajectory propagate(const RotatingState& s0, double dt,
                         const PropagateOptions& opts = {}) const;

    RotatingState propagate_final(const RotatingState& s0, double dt,
                                  const PropagateOptions& opts = {}) const;

    /// State transition matrix of the flow over dt, integrated with the
    /// variational equations; also returns the final state.
    std::pair<RotatingState, Mat6> propagate_with_stm(
        const RotatingState& s0, double dt, const PropagateOptions& opts = {}) const;

    /// Propagate (sign of t_max gives the direction) until the event root,
    /// refined to |g| corresponding to ~1e-10 nondim in time. Returns nullopt
    /// if no crossing occurs within |t_max|.
    std::optional<EventResult> propagate_to_event(
        const RotatingState& s0, const Event& ev, double t_max,
        const PropagateOptions& opts = {}) const;

    /// Event + STM accumulation in one pass (used by the orbit correctors).
    std::optional<std::pair<EventResult, Mat6>> propagate_to_event_with_stm(
        const RotatingState& s0, const Event& ev, double t_max,
        const PropagateOptions& opts = {}) const;

    const Constants& constants() const { return constants_; }

  private:
    Constants constants_;
};

/// Section through the Sun whose half-plane forms `angle` with the Sun-Earth
/// line. The gate restricts roots to the half-plane on the `angle` side.
Event sun_line_section(double mu, double angle, int direction = 0);

}  // namespace ero::cr3bp

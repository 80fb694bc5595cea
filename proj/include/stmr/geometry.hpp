#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace stmr {

inline constexpr double kPi = std::numbers::pi;

// Planar unicycle agent. theta is kept wrapped to (-pi, pi]; omega is the turn
// rate committed on the previous step (zero before the first step).
struct AgentState {
    double x = 0.0;      // m
    double y = 0.0;      // m
    double theta = 0.0;  // rad
    double v = 0.0;      // m/s
    double omega = 0.0;  // rad/s
};

struct SwarmState {
    double t = 0.0;  // s
    std::vector<AgentState> agents;
};

// Bi-agent relative geometry. theta_t is the world-frame line-of-sight angle
// from viewer to target; gamma_a is the target's bearing in the viewer's body
// frame, gamma_b the reverse bearing offset by pi.
struct RelativeGeometry {
    double r;
    double theta_t;
    double gamma_a;
    double gamma_b;
};

// Wraps an angle to the half-open interval (-pi, pi].
inline double wrap_angle(double a) {
    if (!std::isfinite(a)) {
        throw std::domain_error("wrap_angle: non-finite input");
    }
    double w = std::remainder(a, 2.0 * kPi);
    if (w <= -kPi) {
        w = kPi;
    }
    return w;
}

inline RelativeGeometry relative_geometry(const AgentState& viewer, const AgentState& target) {
    const double dx = target.x - viewer.x;
    const double dy = target.y - viewer.y;
    RelativeGeometry g;
    g.r = std::hypot(dx, dy);
    g.theta_t = std::atan2(dy, dx);
    g.gamma_a = wrap_angle(g.theta_t - viewer.theta);
    g.gamma_b = wrap_angle(kPi + target.theta - g.theta_t);
    return g;
}

}

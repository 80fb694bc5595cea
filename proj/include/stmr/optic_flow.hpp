#pragma once

#include <vector>

#include "stmr/geometry.hpp"

namespace stmr {

inline constexpr double kDefaultRMin = 0.05;  // m, one robot body radius

// One pairwise optic-flow evaluation at a neighbor's bearing.
struct FlowSample {
    int neighbor_id;
    double gamma;      // rad, bearing in the viewer's body frame
    double qdot;       // rad/s, signed flow
    double magnitude;  // |qdot|
};

// STMD sensor read: peak |flow|, its azimuth, and the neighbor producing it.
struct StmdOutput {
    double peak_magnitude = 0.0;
    double peak_azimuth = 0.0;
    int target_id = -1;
};

// Inverse range with the singularity clamped: 1/max(r, r_min).
double nearness(double r, double r_min);

// Planar pairwise optic flow evaluated at azimuth gamma:
//   qdot = -omega_a - mu*omega_b + mu*((xd_b - xd_a) sin g - (yd_b - yd_a) cos g)
// with world-frame velocities xd_i = v_i cos theta_i, yd_i = v_i sin theta_i.
double pairwise_flow(const AgentState& viewer, const AgentState& target, double gamma,
                     double r_min);

// Flow of every neighbor evaluated at that neighbor's own bearing, in agent
// index order (the viewer itself is skipped).
std::vector<FlowSample> flow_field(const SwarmState& swarm, int viewer_id, double r_min);

// Max/argmax over |flow|; ties broken toward the lowest agent index.
StmdOutput stmd_sense(const SwarmState& swarm, int viewer_id, double r_min);

}

#include "stmr/optic_flow.hpp"

#include <stdexcept>

namespace stmr {

double nearness(double r, double r_min) {
    return 1.0 / std::max(r, r_min);
}

double pairwise_flow(const AgentState& viewer, const AgentState& target, double gamma,
                     double r_min) {
    const double dx = target.x - viewer.x;
    const double dy = target.y - viewer.y;
    const double mu = nearness(std::hypot(dx, dy), r_min);
    const double rel_vx = target.v * std::cos(target.theta) - viewer.v * std::cos(viewer.theta);
    const double rel_vy = target.v * std::sin(target.theta) - viewer.v * std::sin(viewer.theta);
    return -viewer.omega - mu * target.omega +
           mu * (rel_vx * std::sin(gamma) - rel_vy * std::cos(gamma));
}

std::vector<FlowSample> flow_field(const SwarmState& swarm, int viewer_id, double r_min) {
    const int n = static_cast<int>(swarm.agents.size());
    if (n < 2) {
        throw std::invalid_argument("flow_field: need at least two agents");
    }
    const AgentState& viewer = swarm.agents[viewer_id];
    std::vector<FlowSample> field;
    field.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
        if (j == viewer_id) {
            continue;
        }
        const RelativeGeometry g = relative_geometry(viewer, swarm.agents[j]);
        const double q = pairwise_flow(viewer, swarm.agents[j], g.gamma_a, r_min);
        field.push_back({j, g.gamma_a, q, std::abs(q)});
    }
    return field;
}

StmdOutput stmd_sense(const SwarmState& swarm, int viewer_id, double r_min) {
    const std::vector<FlowSample> field = flow_field(swarm, viewer_id, r_min);
    const FlowSample* best = &field.front();
    for (const FlowSample& s : field) {
        if (s.magnitude > best->magnitude) {
            best = &s;
        }
    }
    return {best->magnitude, best->gamma, best->neighbor_id};
}

}

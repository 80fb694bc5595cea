#include "stmr/controllers.hpp"

#include <stdexcept>

namespace stmr {

double pure_pursuit(const StmdOutput& sense, double gain_k, double omega_max) {
    return clamp_turn_rate(gain_k * sense.peak_azimuth, omega_max);
}

double los_rate(const AgentState& viewer, const AgentState& target, double r_min) {
    const double dx = target.x - viewer.x;
    const double dy = target.y - viewer.y;
    const double mu = nearness(std::hypot(dx, dy), r_min);
    const double theta_t = std::atan2(dy, dx);
    const double rel_vx = target.v * std::cos(target.theta) - viewer.v * std::cos(viewer.theta);
    const double rel_vy = target.v * std::sin(target.theta) - viewer.v * std::sin(viewer.theta);
    return mu * (rel_vy * std::cos(theta_t) - rel_vx * std::sin(theta_t));
}

double motion_camouflage(const AgentState& viewer, const AgentState& target, double gain_k,
                         double omega_max, double r_min) {
    return clamp_turn_rate(-gain_k * los_rate(viewer, target, r_min), omega_max);
}

double vicsek_heading(const SwarmState& swarm, int i, double radius, double eta,
                      std::mt19937_64& rng) {
    const AgentState& self = swarm.agents[i];
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    for (const AgentState& other : swarm.agents) {
        if (std::hypot(other.x - self.x, other.y - self.y) <= radius) {
            sum_sin += std::sin(other.theta);
            sum_cos += std::cos(other.theta);
        }
    }
    double xi = 0.0;
    if (eta > 0.0) {
        xi = std::uniform_real_distribution<double>(-eta / 2.0, eta / 2.0)(rng);
    }
    return wrap_angle(std::atan2(sum_sin, sum_cos) + xi);
}

double cs_weight(double r, double beta) {
    return 1.0 / std::pow(1.0 + r * r, beta);
}

std::pair<double, double> cucker_smale_accel(const SwarmState& swarm, int i, double strength,
                                             double beta) {
    const int n = static_cast<int>(swarm.agents.size());
    if (n < 2) {
        throw std::invalid_argument("cucker_smale_accel: need at least two agents");
    }
    const AgentState& self = swarm.agents[i];
    const double vx_i = self.v * std::cos(self.theta);
    const double vy_i = self.v * std::sin(self.theta);
    double ax = 0.0;
    double ay = 0.0;
    for (int j = 0; j < n; ++j) {
        if (j == i) {
            continue;
        }
        const AgentState& other = swarm.agents[j];
        const double psi = cs_weight(std::hypot(other.x - self.x, other.y - self.y), beta);
        ax += psi * (other.v * std::cos(other.theta) - vx_i);
        ay += psi * (other.v * std::sin(other.theta) - vy_i);
    }
    const double scale = strength / n;
    return {scale * ax, scale * ay};
}

double wfi_feedback(const SwarmState& swarm, int i, double gain_k, double omega_max,
                    double r_min, int n_samples) {
    if (n_samples < 8) {
        throw std::invalid_argument("wfi_feedback: need at least 8 azimuthal bins");
    }
    const double width = 2.0 * kPi / n_samples;
    std::vector<double> ring(n_samples, 0.0);
    for (const FlowSample& s : flow_field(swarm, i, r_min)) {
        // gamma is in (-pi, pi]; the gamma == pi edge belongs to the last bin.
        int bin = static_cast<int>((s.gamma + kPi) / width);
        bin = std::min(bin, n_samples - 1);
        ring[bin] += s.qdot;
    }
    double integral = 0.0;
    for (int b = 0; b < n_samples; ++b) {
        const double center = -kPi + (b + 0.5) * width;
        integral += ring[b] * std::sin(center) * width;
    }
    return clamp_turn_rate(gain_k * integral / kPi, omega_max);
}

}

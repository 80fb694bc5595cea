#pragma once

#include <random>
#include <utility>

#include "stmr/optic_flow.hpp"

namespace stmr {

enum class ControllerKind {
    stmr_pure_pursuit,
    stmr_motion_camouflage,
    vicsek,
    cucker_smale,
    wfi,
};

struct ControllerConfig {
    ControllerKind kind = ControllerKind::stmr_pure_pursuit;
    double gain_k = 0.1;
    double omega_max = 2.84;        // rad/s, robot actuation limit
    double vicsek_radius = 1.0;     // m
    double vicsek_noise_eta = 0.1;  // rad, full width of the uniform noise
    double cs_strength = 1.0;       // 1/s
    double cs_beta = 0.5;
    int wfi_samples = 36;           // azimuthal bins, >= 8
};

inline double clamp_turn_rate(double omega, double omega_max) {
    return std::clamp(omega, -omega_max, omega_max);
}

// Steer proportionally to the peak-flow azimuth.
double pure_pursuit(const StmdOutput& sense, double gain_k, double omega_max);

// World-frame rotation rate of the viewer->target line of sight, with the
// range clamped at r_min like the nearness term.
double los_rate(const AgentState& viewer, const AgentState& target, double r_min);

// Steer to null the line-of-sight rate.
double motion_camouflage(const AgentState& viewer, const AgentState& target, double gain_k,
                         double omega_max, double r_min);

// Circular-mean heading over the interaction disc (self included) plus uniform
// noise on [-eta/2, eta/2]. Returns the replacement heading, not a rate.
double vicsek_heading(const SwarmState& swarm, int i, double radius, double eta,
                      std::mt19937_64& rng);

// Communication weight psi(r) = 1/(1 + r^2)^beta.
double cs_weight(double r, double beta);

// Velocity-consensus acceleration (strength/N) * sum_j psi(r_ij) (v_j - v_i).
std::pair<double, double> cucker_smale_accel(const SwarmState& swarm, int i, double strength,
                                             double beta);

// First sine harmonic of the binned azimuthal flow ring, midpoint rule:
//   omega = clamp(K/pi * sum_bins q_bin sin(center) * width).
double wfi_feedback(const SwarmState& swarm, int i, double gain_k, double omega_max,
                    double r_min, int n_samples);

}

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "stmr/controllers.hpp"

namespace stmr {

// Parameters of the bi-agent pursuit error dynamics; alpha = v*mu.
struct BiAgentParams {
    double k_a = 0.1;
    double k_b = 0.0;
    double alpha = 0.1;
};

// Bi-agent error dynamics:
//   dga = alpha sin(ga) + alpha sin(gb) - k_a ga
//   dgb = k_b gb - alpha sin(ga) - alpha sin(gb)
std::pair<double, double> biagent_error_rhs(double gamma_a, double gamma_b,
                                            const BiAgentParams& p);

// Jacobian at the origin for the straight-line-target case (k_b = 0):
// [[alpha - k_a, alpha], [-alpha, -alpha]], row-major.
std::array<double, 4> biagent_linearization(const BiAgentParams& p);

// Eigenvalues of a real 2x2 matrix via the quadratic formula on the
// characteristic polynomial, sorted by (real, imag).
std::array<std::complex<double>, 2> eig2(const std::array<double, 4>& m);

// |sum exp(i theta)| / N.
double polarization(const std::vector<double>& headings);

struct CircularStats {
    std::optional<double> mean;  // absent when the resultant vanishes
    double variance;             // 1 - polarization
};

CircularStats circular_mean_and_variance(const std::vector<double>& headings);

// Population variance of values on the real line (used on unwrapped headings).
double linear_variance(const std::vector<double>& values);

// Symmetric weighted adjacency of one timestep, zero diagonal.
struct InteractionGraph {
    int n = 0;
    std::vector<double> w;  // n*n row-major

    static InteractionGraph empty(int n) { return {n, std::vector<double>(n * n, 0.0)}; }
    double at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
    void set(int i, int j, double value) {
        w[static_cast<std::size_t>(i) * n + j] = value;
        w[static_cast<std::size_t>(j) * n + i] = value;
    }
};

// Interaction graph for one snapshot. `targets` carries each agent's tracked
// neighbor (-1 when none) and is only read for the STMR kinds; baseline kinds
// weight pairs by their own rules.
InteractionGraph build_graph(ControllerKind kind, const SwarmState& state,
                             const std::vector<int>& targets, const ControllerConfig& ctrl,
                             double r_min);

int edge_count(const InteractionGraph& g);
int component_count(const InteractionGraph& g);

// Algebraic connectivity: second-smallest eigenvalue of L = D - W.
double fiedler(const InteractionGraph& g);

// Accumulates `g` into `acc` by taking entrywise weight maxima.
void union_inplace(InteractionGraph& acc, const InteractionGraph& g);

// Cumulative trapezoidal integral of a uniformly sampled series.
std::vector<double> cumulative_trapezoid(const std::vector<double>& series, double dt);

// Per-timestep swarm statistics and connectivity.
struct MetricsSeries {
    std::vector<double> time;
    std::vector<double> polarization;
    std::vector<std::optional<double>> mean_heading;
    std::vector<double> heading_variance;         // circular
    std::vector<double> heading_variance_linear;  // on unwrapped headings
    std::vector<double> fiedler_instant;
    std::vector<double> fiedler_union;
    std::vector<double> attentional_work;
};

}

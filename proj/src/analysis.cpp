#include "stmr/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace stmr {

std::pair<double, double> biagent_error_rhs(double gamma_a, double gamma_b,
                                            const BiAgentParams& p) {
    const double coupling = p.alpha * std::sin(gamma_a) + p.alpha * std::sin(gamma_b);
    return {coupling - p.k_a * gamma_a, p.k_b * gamma_b - coupling};
}

std::array<double, 4> biagent_linearization(const BiAgentParams& p) {
    if (p.k_b != 0.0) {
        throw std::invalid_argument("biagent_linearization: requires k_b = 0");
    }
    return {p.alpha - p.k_a, p.alpha, -p.alpha, -p.alpha};
}

std::array<std::complex<double>, 2> eig2(const std::array<double, 4>& m) {
    const double tr = m[0] + m[3];
    const double det = m[0] * m[3] - m[1] * m[2];
    const double disc = tr * tr - 4.0 * det;
    std::array<std::complex<double>, 2> out;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        out[0] = {(tr - s) / 2.0, 0.0};
        out[1] = {(tr + s) / 2.0, 0.0};
    } else {
        const double s = std::sqrt(-disc);
        out[0] = {tr / 2.0, -s / 2.0};
        out[1] = {tr / 2.0, s / 2.0};
    }
    if (out[1].real() < out[0].real() ||
        (out[1].real() == out[0].real() && out[1].imag() < out[0].imag())) {
        std::swap(out[0], out[1]);
    }
    return out;
}

double polarization(const std::vector<double>& headings) {
    if (headings.empty()) {
        throw std::invalid_argument("polarization: empty heading list");
    }
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    for (double h : headings) {
        sum_sin += std::sin(h);
        sum_cos += std::cos(h);
    }
    return std::hypot(sum_sin, sum_cos) / static_cast<double>(headings.size());
}

CircularStats circular_mean_and_variance(const std::vector<double>& headings) {
    if (headings.empty()) {
        throw std::invalid_argument("circular_mean_and_variance: empty heading list");
    }
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    for (double h : headings) {
        sum_sin += std::sin(h);
        sum_cos += std::cos(h);
    }
    const double resultant = std::hypot(sum_sin, sum_cos) / static_cast<double>(headings.size());
    CircularStats stats;
    stats.variance = 1.0 - resultant;
    if (resultant > 0.0) {
        stats.mean = std::atan2(sum_sin, sum_cos);
    }
    return stats;
}

double linear_variance(const std::vector<double>& values) {
    if (values.empty()) {
        throw std::invalid_argument("linear_variance: empty list");
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) {
        acc += (v - mean) * (v - mean);
    }
    return acc / static_cast<double>(values.size());
}

InteractionGraph build_graph(ControllerKind kind, const SwarmState& state,
                             const std::vector<int>& targets, const ControllerConfig& ctrl,
                             double r_min) {
    const int n = static_cast<int>(state.agents.size());
    InteractionGraph g = InteractionGraph::empty(n);
    switch (kind) {
        case ControllerKind::stmr_pure_pursuit:
        case ControllerKind::stmr_motion_camouflage:
            // Undirected tracking relation, unit weight, mutual pairs collapse
            // to a single edge.
            for (int i = 0; i < n; ++i) {
                const int t = targets[i];
                if (t >= 0 && t != i) {
                    g.set(i, t, 1.0);
                }
            }
            break;
        case ControllerKind::vicsek:
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const double r = std::hypot(state.agents[j].x - state.agents[i].x,
                                                state.agents[j].y - state.agents[i].y);
                    if (r <= ctrl.vicsek_radius) {
                        g.set(i, j, 1.0);
                    }
                }
            }
            break;
        case ControllerKind::cucker_smale:
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const double r = std::hypot(state.agents[j].x - state.agents[i].x,
                                                state.agents[j].y - state.agents[i].y);
                    g.set(i, j, cs_weight(r, ctrl.cs_beta));
                }
            }
            break;
        case ControllerKind::wfi:
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const double r = std::hypot(state.agents[j].x - state.agents[i].x,
                                                state.agents[j].y - state.agents[i].y);
                    g.set(i, j, nearness(r, r_min));
                }
            }
            break;
    }
    return g;
}

int edge_count(const InteractionGraph& g) {
    int count = 0;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (g.at(i, j) > 0.0) {
                ++count;
            }
        }
    }
    return count;
}

int component_count(const InteractionGraph& g) {
    std::vector<int> root(g.n);
    for (int i = 0; i < g.n; ++i) {
        root[i] = i;
    }
    auto find = [&](int a) {
        while (root[a] != a) {
            root[a] = root[root[a]];
            a = root[a];
        }
        return a;
    };
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (g.at(i, j) > 0.0) {
                root[find(i)] = find(j);
            }
        }
    }
    int count = 0;
    for (int i = 0; i < g.n; ++i) {
        if (find(i) == i) {
            ++count;
        }
    }
    return count;
}

double fiedler(const InteractionGraph& g) {
    if (g.n < 2) {
        throw std::invalid_argument("fiedler: need at least two nodes");
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        double degree = 0.0;
        for (int j = 0; j < g.n; ++j) {
            if (j != i) {
                const double w = g.at(i, j);
                degree += w;
                lap(i, j) = -w;
            }
        }
        lap(i, i) = degree;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fiedler: eigensolver failed to converge");
    }
    return solver.eigenvalues()(1);
}

void union_inplace(InteractionGraph& acc, const InteractionGraph& g) {
    if (acc.n != g.n) {
        throw std::invalid_argument("union_inplace: node counts differ");
    }
    for (std::size_t k = 0; k < acc.w.size(); ++k) {
        acc.w[k] = std::max(acc.w[k], g.w[k]);
    }
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& series, double dt) {
    std::vector<double> out(series.size(), 0.0);
    for (std::size_t k = 1; k < series.size(); ++k) {
        out[k] = out[k - 1] + 0.5 * (series[k - 1] + series[k]) * dt;
    }
    return out;
}

}

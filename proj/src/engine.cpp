#include "stmr/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "stmr/rng.hpp"

namespace stmr {

namespace {

bool finite_state(const AgentState& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.theta) &&
           std::isfinite(a.v) && std::isfinite(a.omega);
}

// Wrap that tolerates non-finite input so a diverging state reaches the
// engine's abort check instead of throwing mid-commit.
double wrap_or_pass(double a) {
    return std::isfinite(a) ? wrap_angle(a) : a;
}

}  // namespace

int step_count(double duration, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("step_count: dt must be positive");
    }
    const double ratio = duration / dt;
    return static_cast<int>(std::floor(ratio + std::max(1e-9, ratio * 1e-12)));
}

std::vector<PoseInit> resolve_init(const ScenarioConfig& cfg) {
    std::vector<PoseInit> poses;
    if (cfg.init.kind == InitSpec::Kind::explicit_poses) {
        if (static_cast<int>(cfg.init.poses.size()) != cfg.n_agents) {
            throw std::invalid_argument("init: explicit pose count does not match n_agents");
        }
        poses = cfg.init.poses;
        for (PoseInit& p : poses) {
            p.theta = wrap_angle(p.theta);
            if (!p.v) {
                p.v = cfg.v;
            }
        }
        return poses;
    }
    std::mt19937_64 rng = make_stream(cfg.seed, kInitStream);
    std::uniform_real_distribution<double> ux(cfg.init.x_min, cfg.init.x_max);
    std::uniform_real_distribution<double> uy(cfg.init.y_min, cfg.init.y_max);
    std::uniform_real_distribution<double> uth(-kPi, kPi);
    poses.resize(cfg.n_agents);
    for (PoseInit& p : poses) {
        p.x = ux(rng);
        p.y = uy(rng);
        p.theta = wrap_angle(uth(rng));
        p.v = cfg.v;
    }
    if (cfg.controller.kind == ControllerKind::cucker_smale) {
        std::mt19937_64 vrng = make_stream(cfg.seed, kCsSpeedStream);
        std::uniform_real_distribution<double> uv(0.5, 1.5);
        for (PoseInit& p : poses) {
            p.v = cfg.v * uv(vrng);
        }
    }
    return poses;
}

SwarmState initial_state(const ScenarioConfig& cfg) {
    SwarmState state;
    state.t = 0.0;
    state.agents.reserve(cfg.n_agents);
    for (const PoseInit& p : resolve_init(cfg)) {
        state.agents.push_back({p.x, p.y, p.theta, *p.v, 0.0});
    }
    return state;
}

SwarmState step(const SwarmState& state, const ScenarioConfig& cfg,
                std::vector<DwellTimeLedger>& ledgers, std::vector<std::mt19937_64>& agent_rngs,
                StepTrace* trace, bool reversed_order) {
    const int n = static_cast<int>(state.agents.size());
    const ControllerConfig& ctrl = cfg.controller;
    const ControllerKind kind = ctrl.kind;

    std::vector<double> omega_cmd(n, 0.0);
    std::vector<double> theta_cmd(n, 0.0);   // vicsek replacement headings
    std::vector<double> accel_x(n, 0.0);     // cucker_smale
    std::vector<double> accel_y(n, 0.0);
    if (trace) {
        trace->events.clear();
        trace->targets.assign(n, -1);
        trace->peaks.assign(n, 0.0);
    }

    for (int idx = 0; idx < n; ++idx) {
        const int i = reversed_order ? n - 1 - idx : idx;
        if (cfg.single_agent && i != 0) {
            if (kind == ControllerKind::vicsek) {
                theta_cmd[i] = state.agents[i].theta;
            }
            continue;
        }
        switch (kind) {
            case ControllerKind::stmr_pure_pursuit:
            case ControllerKind::stmr_motion_camouflage: {
                const StmdOutput sensed = stmd_sense(state, i, cfg.r_min);
                DwellTimeLedger& ledger = ledgers[i];
                const int old_target = ledger.current_target;
                if (sensed.target_id != old_target) {
                    const bool accepted =
                        request_switch(ledger, cfg.dwell, state.t, sensed.target_id);
                    if (trace) {
                        trace->events.push_back(
                            {state.t, i, old_target, sensed.target_id, accepted});
                    }
                }
                const int tracked = ledger.current_target;
                const AgentState& target = state.agents[tracked];
                if (kind == ControllerKind::stmr_pure_pursuit) {
                    const RelativeGeometry g = relative_geometry(state.agents[i], target);
                    StmdOutput tracked_peak;
                    tracked_peak.peak_azimuth = g.gamma_a;
                    tracked_peak.peak_magnitude =
                        std::abs(pairwise_flow(state.agents[i], target, g.gamma_a, cfg.r_min));
                    tracked_peak.target_id = tracked;
                    omega_cmd[i] = pure_pursuit(tracked_peak, ctrl.gain_k, ctrl.omega_max);
                } else {
                    omega_cmd[i] = motion_camouflage(state.agents[i], target, ctrl.gain_k,
                                                     ctrl.omega_max, cfg.r_min);
                }
                if (trace) {
                    trace->targets[i] = tracked;
                    trace->peaks[i] = sensed.peak_magnitude;
                }
                break;
            }
            case ControllerKind::vicsek:
                theta_cmd[i] = vicsek_heading(state, i, ctrl.vicsek_radius, ctrl.vicsek_noise_eta,
                                              agent_rngs[i]);
                break;
            case ControllerKind::cucker_smale: {
                const auto [ax, ay] = cucker_smale_accel(state, i, ctrl.cs_strength, ctrl.cs_beta);
                accel_x[i] = ax;
                accel_y[i] = ay;
                break;
            }
            case ControllerKind::wfi:
                omega_cmd[i] = wfi_feedback(state, i, ctrl.gain_k, ctrl.omega_max, cfg.r_min,
                                            ctrl.wfi_samples);
                break;
        }
    }

    // Commit: displacements always use the pre-step heading and speed.
    SwarmState next;
    next.t = state.t + cfg.dt;
    next.agents = state.agents;
    for (int i = 0; i < n; ++i) {
        AgentState& a = next.agents[i];
        const AgentState& prev = state.agents[i];
        a.x = prev.x + prev.v * std::cos(prev.theta) * cfg.dt;
        a.y = prev.y + prev.v * std::sin(prev.theta) * cfg.dt;
        switch (kind) {
            case ControllerKind::vicsek:
                a.theta = theta_cmd[i];
                a.omega = wrap_or_pass(a.theta - prev.theta) / cfg.dt;
                break;
            case ControllerKind::cucker_smale: {
                const double vx = prev.v * std::cos(prev.theta) + accel_x[i] * cfg.dt;
                const double vy = prev.v * std::sin(prev.theta) + accel_y[i] * cfg.dt;
                a.v = std::hypot(vx, vy);
                a.theta = a.v > 1e-12 ? std::atan2(vy, vx) : prev.theta;
                a.omega = wrap_or_pass(a.theta - prev.theta) / cfg.dt;
                break;
            }
            default:
                a.theta = wrap_or_pass(prev.theta + omega_cmd[i] * cfg.dt);
                a.omega = omega_cmd[i];
                break;
        }
    }
    return next;
}

RunResult run(const ScenarioConfig& cfg) {
    return run(cfg, RunOptions{});
}

RunResult run(const ScenarioConfig& cfg, const RunOptions& options) {
    RunResult result;
    const int n = cfg.n_agents;
    SwarmState state = initial_state(cfg);

    result.ledgers.assign(n, DwellTimeLedger{});
    std::vector<std::mt19937_64> agent_rngs;
    agent_rngs.reserve(n);
    for (int i = 0; i < n; ++i) {
        agent_rngs.push_back(make_stream(cfg.seed, static_cast<std::uint64_t>(i)));
    }

    std::vector<double> unwrapped(n);
    for (int i = 0; i < n; ++i) {
        unwrapped[i] = state.agents[i].theta;
    }

    TrajectoryLog& log = result.log;
    const int steps = step_count(cfg.duration, cfg.dt);
    log.times.reserve(steps + 1);
    log.snapshots.reserve(steps + 1);
    log.times.push_back(state.t);
    log.snapshots.push_back(state.agents);
    log.unwrapped.push_back(unwrapped);
    log.targets.emplace_back(n, -1);
    log.peaks.emplace_back(n, 0.0);

    StepTrace trace;
    for (int k = 1; k <= steps; ++k) {
        SwarmState next =
            step(state, cfg, result.ledgers, agent_rngs, &trace, options.reversed_agent_order);
        result.switches.insert(result.switches.end(), trace.events.begin(), trace.events.end());

        bool bad = false;
        for (int i = 0; i < n && !bad; ++i) {
            if (!finite_state(next.agents[i])) {
                result.aborted = true;
                result.abort_step = k;
                result.abort_reason = "non-finite state for agent " + std::to_string(i) +
                                      " at step " + std::to_string(k);
                bad = true;
            }
        }
        if (bad) {
            break;
        }

        for (int i = 0; i < n; ++i) {
            unwrapped[i] += wrap_angle(next.agents[i].theta - state.agents[i].theta);
        }
        log.times.push_back(next.t);
        log.snapshots.push_back(next.agents);
        log.unwrapped.push_back(unwrapped);
        log.targets.push_back(trace.targets);
        log.peaks.push_back(trace.peaks);
        state = std::move(next);
    }

    if (options.with_metrics) {
        result.metrics = compute_metrics(log, cfg);
    }
    return result;
}

MetricsSeries compute_metrics(const TrajectoryLog& log, const ScenarioConfig& cfg) {
    MetricsSeries m;
    const std::size_t snaps = log.snapshots.size();
    m.time = log.times;
    m.polarization.reserve(snaps);
    m.mean_heading.reserve(snaps);
    m.heading_variance.reserve(snaps);
    m.heading_variance_linear.reserve(snaps);
    m.fiedler_instant.reserve(snaps);
    m.fiedler_union.reserve(snaps);

    InteractionGraph union_graph;
    InteractionGraph prev_graph;
    double prev_fiedler = 0.0;
    std::vector<double> prev_union_w;
    double prev_union_fiedler = 0.0;

    std::vector<double> headings;
    for (std::size_t k = 0; k < snaps; ++k) {
        const std::vector<AgentState>& agents = log.snapshots[k];
        headings.clear();
        for (const AgentState& a : agents) {
            headings.push_back(a.theta);
        }
        const CircularStats stats = circular_mean_and_variance(headings);
        m.polarization.push_back(1.0 - stats.variance);
        m.mean_heading.push_back(stats.mean);
        m.heading_variance.push_back(stats.variance);
        m.heading_variance_linear.push_back(linear_variance(log.unwrapped[k]));

        SwarmState snap;
        snap.t = log.times[k];
        snap.agents = agents;
        InteractionGraph g =
            build_graph(cfg.controller.kind, snap, log.targets[k], cfg.controller, cfg.r_min);

        // The tracking graph only changes on switches and baselines often
        // repeat weights; identical weight matrices reuse the previous solve.
        if (k == 0 || g.w != prev_graph.w) {
            prev_fiedler = fiedler(g);
        }
        m.fiedler_instant.push_back(prev_fiedler);
        prev_graph = g;

        if (k == 0) {
            union_graph = g;
        } else {
            union_inplace(union_graph, g);
        }
        if (k == 0 || union_graph.w != prev_union_w) {
            prev_union_fiedler = fiedler(union_graph);
            prev_union_w = union_graph.w;
        }
        m.fiedler_union.push_back(prev_union_fiedler);
    }
    m.attentional_work = cumulative_trapezoid(m.fiedler_union, cfg.dt);
    return m;
}

}

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stmr/analysis.hpp"
#include "stmr/controllers.hpp"
#include "stmr/switching.hpp"

namespace stmr {

struct PoseInit {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    std::optional<double> v;  // per-agent speed; defaults to the scenario speed
};

struct InitSpec {
    enum class Kind { explicit_poses, random_box };
    Kind kind = Kind::random_box;
    std::vector<PoseInit> poses;  // explicit_poses only
    double x_min = -2.0;
    double x_max = 2.0;
    double y_min = -2.0;
    double y_max = 2.0;
};

struct ScenarioConfig {
    int n_agents = 20;
    ControllerConfig controller;
    DwellTimeConfig dwell;
    double v = 0.1;          // m/s
    double dt = 0.01;        // s
    double duration = 50.0;  // s
    std::uint64_t seed = 1;
    InitSpec init;
    double r_min = kDefaultRMin;
    bool single_agent = false;  // only agent 0 reactive, the rest hold heading
};

// Number of integration steps; snapshots = steps + 1. Guards the duration/dt
// quotient against representation error so 50/0.01 is 5000, never 4999.
int step_count(double duration, double dt);

// Initial poses with speeds filled in. Random-box draws positions and headings
// from the seed's init substream; the Cucker-Smale model additionally spreads
// initial speeds over [0.5v, 1.5v] from its own substream.
std::vector<PoseInit> resolve_init(const ScenarioConfig& cfg);

SwarmState initial_state(const ScenarioConfig& cfg);

// Per-step sensing/switching record, one entry per agent (-1 / 0 where the
// model has no tracked target).
struct StepTrace {
    std::vector<SwitchEvent> events;
    std::vector<int> targets;
    std::vector<double> peaks;
};

// One synchronous step: every agent senses and decides against the previous
// committed state, then all updates are committed together. `reversed_order`
// evaluates agents in reverse index order and must not change any result.
SwarmState step(const SwarmState& state, const ScenarioConfig& cfg,
                std::vector<DwellTimeLedger>& ledgers, std::vector<std::mt19937_64>& agent_rngs,
                StepTrace* trace = nullptr, bool reversed_order = false);

struct TrajectoryLog {
    std::vector<double> times;
    std::vector<std::vector<AgentState>> snapshots;
    std::vector<std::vector<double>> unwrapped;  // cumulative headings
    std::vector<std::vector<int>> targets;       // tracked neighbor, -1 none
    std::vector<std::vector<double>> peaks;      // sensed peak |flow|
};

struct RunResult {
    TrajectoryLog log;
    std::vector<SwitchEvent> switches;
    MetricsSeries metrics;
    std::vector<DwellTimeLedger> ledgers;
    bool aborted = false;
    int abort_step = -1;
    std::string abort_reason;
};

struct RunOptions {
    bool reversed_agent_order = false;
    bool with_metrics = true;
};

RunResult run(const ScenarioConfig& cfg);
RunResult run(const ScenarioConfig& cfg, const RunOptions& options);

// Post-processing of a recorded log into the per-timestep metrics series; the
// config supplies the model kind, graph parameters, and dt.
MetricsSeries compute_metrics(const TrajectoryLog& log, const ScenarioConfig& cfg);

}

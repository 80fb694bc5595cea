#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stmr/analysis.hpp"
#include "stmr/engine.hpp"

namespace stmr {

// shortest decimal text that round-trips back to the same double
std::string format_double(double x);

// run identity stamped into every table's comment line
struct ExportStamp {
    std::string config_hash;
    std::uint64_t seed = 0;
};

void write_trajectory_csv(const std::string& path, const TrajectoryLog& log,
                          const ExportStamp& stamp);
void write_switches_csv(const std::string& path, const std::vector<SwitchEvent>& events,
                        const ExportStamp& stamp);
void write_metrics_csv(const std::string& path, const MetricsSeries& metrics,
                       const ExportStamp& stamp);

// joined per-model metrics table for side-by-side comparison
void write_comparison_csv(const std::string& path,
                          const std::vector<std::pair<std::string, const MetricsSeries*>>& models,
                          const ExportStamp& stamp);

struct StabilityRow {
    double k_a = 0.0;
    double alpha = 0.0;
    std::array<std::complex<double>, 2> eigs{};
    bool stable = false;
};

void write_stability_csv(const std::string& path, const std::vector<StabilityRow>& rows,
                         const ExportStamp& stamp);

// one row per seed plus a trailing aggregate row; seed rows carry min = max = value
struct SweepRow {
    std::string label;
    double final_polarization = 0.0;
    double final_polarization_min = 0.0;
    double final_polarization_max = 0.0;
    double final_heading_variance = 0.0;
    double final_heading_variance_min = 0.0;
    double final_heading_variance_max = 0.0;
    double initial_heading_variance = 0.0;
};

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows,
                     const ExportStamp& stamp);

// parsed trajectory table, reshaped back into per-snapshot form
struct TrajectoryRead {
    ExportStamp stamp;
    std::string version;
    int n_agents = 0;
    TrajectoryLog log;
};

TrajectoryRead read_trajectory_csv(const std::string& path);

}  // namespace stmr

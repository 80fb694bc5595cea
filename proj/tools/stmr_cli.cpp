// command-line front end: simulate / compare / stability / sweep
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stmr/analysis.hpp"
#include "stmr/engine.hpp"
#include "stmr/export.hpp"
#include "stmr/scenario.hpp"
#include "stmr/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct GridSpec {
    double lo = 0.01;
    double hi = 10.0;
    int n = 4;
    bool log_spacing = true;
};

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        parts.push_back(tok);
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw stmr::ConfigError("grid must be lo:hi:n or lo:hi:n:log|lin, got '" + text + "'");
    }
    GridSpec g;
    try {
        g.lo = std::stod(parts[0]);
        g.hi = std::stod(parts[1]);
        g.n = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw stmr::ConfigError("bad grid numbers in '" + text + "'");
    }
    g.log_spacing = false;
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            g.log_spacing = true;
        } else if (parts[3] != "lin") {
            throw stmr::ConfigError("grid spacing must be 'log' or 'lin' in '" + text + "'");
        }
    }
    if (g.n < 1) {
        throw stmr::ConfigError("grid point count must be at least 1 in '" + text + "'");
    }
    if (g.log_spacing && !(g.lo > 0.0 && g.hi > 0.0)) {
        throw stmr::ConfigError("log-spaced grid needs positive bounds in '" + text + "'");
    }
    return g;
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> pts;
    if (g.n == 1) {
        pts.push_back(g.lo);
        return pts;
    }
    if (g.log_spacing) {
        const double lo = std::log10(g.lo);
        const double hi = std::log10(g.hi);
        const double step = (hi - lo) / (g.n - 1);
        for (int i = 0; i < g.n; ++i) {
            pts.push_back(std::pow(10.0, lo + i * step));
        }
    } else {
        const double step = (g.hi - g.lo) / (g.n - 1);
        for (int i = 0; i < g.n; ++i) {
            pts.push_back(g.lo + i * step);
        }
    }
    return pts;
}

// writes the standard per-run file set; returns the exit status for this run
int write_bundle(const fs::path& dir, const stmr::ScenarioConfig& cfg,
                 const stmr::RunResult& result) {
    fs::create_directories(dir);
    const json resolved = stmr::resolved_config_json(cfg);
    const stmr::ExportStamp stamp{stmr::config_hash_hex(resolved), cfg.seed};

    std::ofstream rc(dir / "resolved_config.json", std::ios::binary);
    if (!rc) {
        throw std::runtime_error("cannot write " + (dir / "resolved_config.json").string());
    }
    rc << resolved.dump(2) << "\n";
    rc.close();

    stmr::write_trajectory_csv((dir / "trajectory.csv").string(), result.log, stamp);
    stmr::write_switches_csv((dir / "switches.csv").string(), result.switches, stamp);
    stmr::write_metrics_csv((dir / "metrics.csv").string(), result.metrics, stamp);

    if (result.aborted) {
        std::ofstream fail(dir / "failure.txt", std::ios::binary);
        fail << "# config_hash=" << stamp.config_hash << " seed=" << stamp.seed
             << " version=" << stmr::kVersion << "\n";
        fail << "reason=" << result.abort_reason << "\n";
        fail << "step=" << result.abort_step << "\n";
        std::cerr << "numerical failure: " << result.abort_reason << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, bool no_enforce) {
    stmr::ScenarioConfig cfg = stmr::load_scenario(config_path);
    if (no_enforce) {
        cfg.dwell.enforce = false;
    }
    const stmr::RunResult result = stmr::run(cfg);
    return write_bundle(out_dir, cfg, result);
}

int cmd_compare(const std::string& config_path, const std::string& models_arg,
                const std::string& out_dir, bool single_agent) {
    std::vector<stmr::ControllerKind> kinds;
    std::stringstream ss(models_arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) {
            continue;
        }
        const auto kind = stmr::controller_kind_from_name(name);
        if (!kind) {
            throw stmr::ConfigError("unknown model '" + name + "'");
        }
        kinds.push_back(*kind);
    }
    if (kinds.empty()) {
        throw stmr::ConfigError("model list is empty");
    }

    const stmr::ScenarioConfig base = stmr::load_scenario(config_path);
    int status = kExitOk;
    std::vector<std::pair<std::string, stmr::MetricsSeries>> per_model;
    for (const stmr::ControllerKind kind : kinds) {
        stmr::ScenarioConfig cfg = base;
        cfg.controller.kind = kind;
        if (single_agent) {
            cfg.single_agent = true;
        }
        const stmr::RunResult result = stmr::run(cfg);
        const std::string model = stmr::controller_kind_name(kind);
        const int s = write_bundle(fs::path(out_dir) / model, cfg, result);
        if (s != kExitOk) {
            status = s;
        }
        per_model.emplace_back(model, result.metrics);
    }

    const json base_resolved = stmr::resolved_config_json(base);
    const stmr::ExportStamp stamp{stmr::config_hash_hex(base_resolved), base.seed};
    std::vector<std::pair<std::string, const stmr::MetricsSeries*>> views;
    for (const auto& [model, metrics] : per_model) {
        views.emplace_back(model, &metrics);
    }
    stmr::write_comparison_csv((fs::path(out_dir) / "comparison.csv").string(), views, stamp);
    return status;
}

int cmd_stability(const std::string& ka_arg, const std::string& alpha_arg,
                  const std::string& out_file) {
    const GridSpec ka_spec = parse_grid(ka_arg);
    const GridSpec alpha_spec = parse_grid(alpha_arg);
    const std::vector<double> kas = grid_points(ka_spec);
    const std::vector<double> alphas = grid_points(alpha_spec);
    for (const double a : alphas) {
        if (!(a > 0.0)) {
            throw stmr::ConfigError("alpha grid must be positive");
        }
    }

    std::vector<stmr::StabilityRow> rows;
    for (const double ka : kas) {
        for (const double alpha : alphas) {
            stmr::BiAgentParams p;
            p.k_a = ka;
            p.k_b = 0.0;
            p.alpha = alpha;
            stmr::StabilityRow row;
            row.k_a = ka;
            row.alpha = alpha;
            row.eigs = stmr::eig2(stmr::biagent_linearization(p));
            row.stable = row.eigs[0].real() < 0.0 && row.eigs[1].real() < 0.0;
            rows.push_back(row);
        }
    }

    const json grid_json = {
        {"ka", {ka_spec.lo, ka_spec.hi, ka_spec.n, ka_spec.log_spacing}},
        {"alpha", {alpha_spec.lo, alpha_spec.hi, alpha_spec.n, alpha_spec.log_spacing}},
    };
    const stmr::ExportStamp stamp{stmr::config_hash_hex(grid_json), 0};
    if (const fs::path parent = fs::path(out_file).parent_path(); !parent.empty()) {
        fs::create_directories(parent);
    }
    stmr::write_stability_csv(out_file, rows, stamp);
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, int seeds, const std::string& out_file) {
    if (seeds < 1) {
        throw stmr::ConfigError("--seeds must be at least 1");
    }
    const stmr::ScenarioConfig base = stmr::load_scenario(config_path);

    std::vector<stmr::SweepRow> rows;
    double pol_sum = 0.0, pol_min = 0.0, pol_max = 0.0;
    double var_sum = 0.0, var_min = 0.0, var_max = 0.0;
    double init_var_sum = 0.0;
    int status = kExitOk;
    for (int s = 0; s < seeds; ++s) {
        stmr::ScenarioConfig cfg = base;
        cfg.seed = static_cast<std::uint64_t>(s);
        const stmr::RunResult result = stmr::run(cfg);
        if (result.aborted) {
            std::cerr << "numerical failure at seed " << s << ": " << result.abort_reason << "\n";
            status = kExitNumerical;
        }
        stmr::SweepRow row;
        row.label = "seed_" + std::to_string(s);
        row.final_polarization = result.metrics.polarization.back();
        row.final_polarization_min = row.final_polarization;
        row.final_polarization_max = row.final_polarization;
        row.final_heading_variance = result.metrics.heading_variance.back();
        row.final_heading_variance_min = row.final_heading_variance;
        row.final_heading_variance_max = row.final_heading_variance;
        row.initial_heading_variance = result.metrics.heading_variance.front();
        rows.push_back(row);

        pol_sum += row.final_polarization;
        var_sum += row.final_heading_variance;
        init_var_sum += row.initial_heading_variance;
        if (s == 0) {
            pol_min = pol_max = row.final_polarization;
            var_min = var_max = row.final_heading_variance;
        } else {
            pol_min = std::min(pol_min, row.final_polarization);
            pol_max = std::max(pol_max, row.final_polarization);
            var_min = std::min(var_min, row.final_heading_variance);
            var_max = std::max(var_max, row.final_heading_variance);
        }
    }

    stmr::SweepRow agg;
    agg.label = "aggregate";
    agg.final_polarization = pol_sum / seeds;
    agg.final_polarization_min = pol_min;
    agg.final_polarization_max = pol_max;
    agg.final_heading_variance = var_sum / seeds;
    agg.final_heading_variance_min = var_min;
    agg.final_heading_variance_max = var_max;
    agg.initial_heading_variance = init_var_sum / seeds;
    rows.push_back(agg);

    const json base_resolved = stmr::resolved_config_json(base);
    const stmr::ExportStamp stamp{stmr::config_hash_hex(base_resolved), base.seed};
    if (const fs::path parent = fs::path(out_file).parent_path(); !parent.empty()) {
        fs::create_directories(parent);
    }
    stmr::write_sweep_csv(out_file, rows, stamp);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic swarm pursuit simulator and analysis toolkit"};
    app.set_version_flag("--version", std::string(stmr::kVersion));
    app.require_subcommand(1);

    std::string sim_config, sim_out = ".";
    bool sim_no_enforce = false;
    CLI::App* simulate = app.add_subcommand("simulate", "run one scenario and export its logs");
    simulate->add_option("config", sim_config, "scenario file (JSON)")->required();
    simulate->add_option("--out", sim_out, "output directory");
    simulate->add_flag("--no-dwell-enforce", sim_no_enforce,
                       "disable the average-dwell-time switching constraint");

    std::string cmp_config, cmp_models, cmp_out = ".";
    bool cmp_single = false;
    CLI::App* compare =
        app.add_subcommand("compare", "run several models from shared initial conditions");
    compare->add_option("config", cmp_config, "scenario file (JSON)")->required();
    compare->add_option("--models", cmp_models, "comma-separated model names")->required();
    compare->add_option("--out", cmp_out, "output directory");
    compare->add_flag("--single-agent", cmp_single, "only agent 0 reacts; the rest hold heading");

    std::string st_ka = "0.01:10:4:log", st_alpha = "0.01:10:4:log", st_out = "stability.csv";
    CLI::App* stability =
        app.add_subcommand("stability", "tabulate pairwise-pursuit eigenvalues over a gain grid");
    stability->add_option("--ka", st_ka, "pursuit gain grid lo:hi:n[:log|lin]");
    stability->add_option("--alpha", st_alpha, "speed-over-range grid lo:hi:n[:log|lin]");
    stability->add_option("--out", st_out, "output file");

    std::string sw_config, sw_out = "sweep.csv";
    int sw_seeds = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "repeat one scenario across seeds 0..K-1");
    sweep->add_option("config", sw_config, "scenario file (JSON)")->required();
    sweep->add_option("--seeds", sw_seeds, "number of seeds")->required();
    sweep->add_option("--out", sw_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim_config, sim_out, sim_no_enforce);
        }
        if (compare->parsed()) {
            return cmd_compare(cmp_config, cmp_models, cmp_out, cmp_single);
        }
        if (stability->parsed()) {
            return cmd_stability(st_ka, st_alpha, st_out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sw_config, sw_seeds, sw_out);
        }
    } catch (const stmr::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

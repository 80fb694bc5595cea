#include "stmr/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "stmr/version.hpp"

namespace stmr {

namespace {

void write_stamp(std::ostream& out, const ExportStamp& stamp) {
    out << "# config_hash=" << stamp.config_hash << " seed=" << stamp.seed
        << " version=" << kVersion << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    return out;
}

double parse_double(const std::string& field, const std::string& path) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw std::runtime_error("bad numeric field '" + field + "' in '" + path + "'");
    }
    return value;
}

long parse_int(const std::string& field, const std::string& path) {
    long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw std::runtime_error("bad integer field '" + field + "' in '" + path + "'");
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_trajectory_csv(const std::string& path, const TrajectoryLog& log,
                          const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << "time_s,agent_id,x_m,y_m,theta_rad,theta_unwrapped_rad,v_mps,omega_radps,"
           "target_id,peak_flow\n";
    for (std::size_t k = 0; k < log.times.size(); ++k) {
        const auto& agents = log.snapshots[k];
        for (std::size_t i = 0; i < agents.size(); ++i) {
            const AgentState& a = agents[i];
            out << format_double(log.times[k]) << ',' << i << ',' << format_double(a.x) << ','
                << format_double(a.y) << ',' << format_double(a.theta) << ','
                << format_double(log.unwrapped[k][i]) << ',' << format_double(a.v) << ','
                << format_double(a.omega) << ',' << log.targets[k][i] << ','
                << format_double(log.peaks[k][i]) << '\n';
        }
    }
}

void write_switches_csv(const std::string& path, const std::vector<SwitchEvent>& events,
                        const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << "time_s,agent_id,old_target,new_target,accepted\n";
    for (const SwitchEvent& e : events) {
        out << format_double(e.time) << ',' << e.agent_id << ',' << e.old_target << ','
            << e.new_target << ',' << (e.accepted ? 1 : 0) << '\n';
    }
}

namespace {

void write_metrics_row(std::ostream& out, const MetricsSeries& m, std::size_t k) {
    out << format_double(m.time[k]) << ',' << format_double(m.polarization[k]) << ',';
    if (m.mean_heading[k]) {
        out << format_double(*m.mean_heading[k]);
    } else {
        out << "nan";
    }
    out << ',' << format_double(m.heading_variance[k]) << ','
        << format_double(m.heading_variance_linear[k]) << ','
        << format_double(m.fiedler_instant[k]) << ',' << format_double(m.fiedler_union[k]) << ','
        << format_double(m.attentional_work[k]) << '\n';
}

constexpr const char* kMetricsColumns =
    "time_s,polarization,mean_heading_rad,heading_variance,heading_variance_linear,"
    "fiedler_instant,fiedler_union,attentional_work";

}  // namespace

void write_metrics_csv(const std::string& path, const MetricsSeries& metrics,
                       const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << kMetricsColumns << "\n";
    for (std::size_t k = 0; k < metrics.time.size(); ++k) {
        write_metrics_row(out, metrics, k);
    }
}

void write_comparison_csv(const std::string& path,
                          const std::vector<std::pair<std::string, const MetricsSeries*>>& models,
                          const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << "model," << kMetricsColumns << "\n";
    for (const auto& [name, series] : models) {
        for (std::size_t k = 0; k < series->time.size(); ++k) {
            out << name << ',';
            write_metrics_row(out, *series, k);
        }
    }
}

void write_stability_csv(const std::string& path, const std::vector<StabilityRow>& rows,
                         const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << "k_a,alpha,re1,im1,re2,im2,stable\n";
    for (const StabilityRow& r : rows) {
        out << format_double(r.k_a) << ',' << format_double(r.alpha) << ','
            << format_double(r.eigs[0].real()) << ',' << format_double(r.eigs[0].imag()) << ','
            << format_double(r.eigs[1].real()) << ',' << format_double(r.eigs[1].imag()) << ','
            << (r.stable ? 1 : 0) << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows,
                     const ExportStamp& stamp) {
    std::ofstream out = open_out(path);
    write_stamp(out, stamp);
    out << "label,final_polarization,final_polarization_min,final_polarization_max,"
           "final_heading_variance,final_heading_variance_min,final_heading_variance_max,"
           "initial_heading_variance\n";
    for (const SweepRow& r : rows) {
        out << r.label << ',' << format_double(r.final_polarization) << ','
            << format_double(r.final_polarization_min) << ','
            << format_double(r.final_polarization_max) << ','
            << format_double(r.final_heading_variance) << ','
            << format_double(r.final_heading_variance_min) << ','
            << format_double(r.final_heading_variance_max) << ','
            << format_double(r.initial_heading_variance) << '\n';
    }
}

TrajectoryRead read_trajectory_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    TrajectoryRead result;

    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw std::runtime_error("missing header comment in '" + path + "'");
    }
    std::stringstream hs(line.substr(2));
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "config_hash") {
            result.stamp.config_hash = value;
        } else if (key == "seed") {
            result.stamp.seed = static_cast<std::uint64_t>(parse_int(value, path));
        } else if (key == "version") {
            result.version = value;
        }
    }

    if (!std::getline(in, line) || line.rfind("time_s,agent_id,", 0) != 0) {
        throw std::runtime_error("missing column row in '" + path + "'");
    }

    struct Row {
        double t, x, y, theta, unwrapped, v, omega, peak;
        int agent, target;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 10) {
            throw std::runtime_error("bad trajectory row in '" + path + "'");
        }
        Row r;
        r.t = parse_double(f[0], path);
        r.agent = static_cast<int>(parse_int(f[1], path));
        r.x = parse_double(f[2], path);
        r.y = parse_double(f[3], path);
        r.theta = parse_double(f[4], path);
        r.unwrapped = parse_double(f[5], path);
        r.v = parse_double(f[6], path);
        r.omega = parse_double(f[7], path);
        r.target = static_cast<int>(parse_int(f[8], path));
        r.peak = parse_double(f[9], path);
        rows.push_back(r);
    }
    if (rows.empty()) {
        throw std::runtime_error("empty trajectory table in '" + path + "'");
    }

    int n = 0;
    for (const Row& r : rows) {
        n = std::max(n, r.agent + 1);
    }
    if (n < 1 || rows.size() % static_cast<std::size_t>(n) != 0) {
        throw std::runtime_error("ragged trajectory table in '" + path + "'");
    }
    result.n_agents = n;

    const std::size_t snapshots = rows.size() / static_cast<std::size_t>(n);
    TrajectoryLog& log = result.log;
    for (std::size_t k = 0; k < snapshots; ++k) {
        std::vector<AgentState> agents(static_cast<std::size_t>(n));
        std::vector<double> unwrapped(static_cast<std::size_t>(n));
        std::vector<int> targets(static_cast<std::size_t>(n));
        std::vector<double> peaks(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Row& r = rows[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
            if (r.agent != i) {
                throw std::runtime_error("out-of-order agent ids in '" + path + "'");
            }
            agents[static_cast<std::size_t>(i)] = AgentState{r.x, r.y, r.theta, r.v, r.omega};
            unwrapped[static_cast<std::size_t>(i)] = r.unwrapped;
            targets[static_cast<std::size_t>(i)] = r.target;
            peaks[static_cast<std::size_t>(i)] = r.peak;
        }
        log.times.push_back(rows[k * static_cast<std::size_t>(n)].t);
        log.snapshots.push_back(std::move(agents));
        log.unwrapped.push_back(std::move(unwrapped));
        log.targets.push_back(std::move(targets));
        log.peaks.push_back(std::move(peaks));
    }
    return result;
}

}

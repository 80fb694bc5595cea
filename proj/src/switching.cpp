#include "stmr/switching.hpp"

#include <cmath>
#include <stdexcept>

namespace stmr {

double min_average_dwell_time(const DwellTimeConfig& cfg) {
    if (cfg.min_dwell_override) {
        return *cfg.min_dwell_override;
    }
    if (cfg.epsilon >= cfg.lambda) {
        throw std::invalid_argument("dwell config: epsilon must be below lambda");
    }
    if (cfg.mu_k < 1.0) {
        throw std::invalid_argument("dwell config: mu_k must be >= 1");
    }
    return std::log(cfg.mu_k) / (cfg.lambda - cfg.epsilon);
}

bool request_switch(DwellTimeLedger& ledger, const DwellTimeConfig& cfg, double t, int proposed) {
    if (!ledger.switch_times.empty() && t < ledger.switch_times.back()) {
        throw std::invalid_argument("request_switch: time went backwards");
    }
    if (proposed == ledger.current_target) {
        return false;
    }
    if (ledger.current_target < 0) {
        // First assignment: adopt without consuming budget.
        ledger.current_target = proposed;
        return true;
    }
    if (cfg.enforce) {
        const double na = min_average_dwell_time(cfg);
        if (na > 0.0) {
            const int k = ledger.switch_count();
            if (!(k + 1 <= cfg.n0 + (t - ledger.window_start) / na)) {
                return false;
            }
            for (int j = 0; j < k; ++j) {
                // Window starting at switch j holds switches j..k-1 plus this one.
                if (!(k - j + 1 <= cfg.n0 + (t - ledger.switch_times[j]) / na)) {
                    return false;
                }
            }
        }
    }
    ledger.switch_times.push_back(t);
    ledger.current_target = proposed;
    return true;
}

std::vector<double> average_dwell_time_series(const DwellTimeLedger& ledger,
                                              const std::vector<double>& t_grid) {
    std::vector<double> out;
    out.reserve(t_grid.size());
    std::size_t n_before = 0;
    for (std::size_t g = 0; g < t_grid.size(); ++g) {
        const double t = t_grid[g];
        if (g > 0 && t < t_grid[g - 1]) {
            throw std::invalid_argument("average_dwell_time_series: grid must be nondecreasing");
        }
        while (n_before < ledger.switch_times.size() && ledger.switch_times[n_before] < t) {
            ++n_before;
        }
        const double denom = std::max<double>(static_cast<double>(n_before), 1.0);
        out.push_back((t - ledger.window_start) / denom);
    }
    return out;
}

bool dwell_bound_holds(const DwellTimeLedger& ledger, const DwellTimeConfig& cfg) {
    const double na = min_average_dwell_time(cfg);
    if (na <= 0.0) {
        return true;
    }
    const auto& s = ledger.switch_times;
    const int k = ledger.switch_count();
    for (int j = 0; j < k; ++j) {
        // Run-start window up to just past switch j: j+1 switches inside.
        if (!(j + 1 <= cfg.n0 + (s[j] - ledger.window_start) / na)) {
            return false;
        }
        for (int i = 0; i < j; ++i) {
            // Window [s_i, s_j+]: switches i..j inside.
            if (!(j - i + 1 <= cfg.n0 + (s[j] - s[i]) / na)) {
                return false;
            }
        }
    }
    return true;
}

}

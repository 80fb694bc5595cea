#pragma once

#include <optional>
#include <vector>

namespace stmr {

struct DwellTimeConfig {
    double mu_k = 10.0;
    double lambda = 1.0;    // 1/s
    double epsilon = 0.3;   // 1/s, must stay below lambda
    double n0 = 1.0;        // switch allowance, >= 1
    bool enforce = true;
    // Direct choice of the minimum average dwell time in seconds; when set it
    // replaces ln(mu_k)/(lambda - epsilon).
    std::optional<double> min_dwell_override;
};

// Per-agent switch accounting. current_target is -1 until the first sensed
// target is adopted; adoption is not a switch and consumes no budget.
struct DwellTimeLedger {
    int current_target = -1;
    double window_start = 0.0;
    std::vector<double> switch_times;

    int switch_count() const { return static_cast<int>(switch_times.size()); }
};

struct SwitchEvent {
    double time;     // s
    int agent_id;
    int old_target;  // -1 for the initial adoption
    int new_target;
    bool accepted;
};

double min_average_dwell_time(const DwellTimeConfig& cfg);

// Proposes switching the ledger to `proposed` at time t. A self-proposal is a
// no-op. With enforcement on, the switch is accepted only if the dwell bound
//   count of switches in [w, t] + 1 <= n0 + (t - w)/N_a
// holds for every window start w in {window_start} u switch_times, i.e. the
// bound of the switching theorem over every sub-interval ending now, not just
// the run-start window. On acceptance the ledger is updated in place.
bool request_switch(DwellTimeLedger& ledger, const DwellTimeConfig& cfg, double t, int proposed);

// Observed average dwell time A(t) = (t - window_start)/max(N_sigma(t), 1),
// the sawtooth that drops at each accepted switch. N_sigma counts switches
// strictly before t.
std::vector<double> average_dwell_time_series(const DwellTimeLedger& ledger,
                                              const std::vector<double>& t_grid);

// Post-run audit: the dwell bound over every pair of recorded events, using
// the same float expressions as request_switch so an enforced run can never
// fail it.
bool dwell_bound_holds(const DwellTimeLedger& ledger, const DwellTimeConfig& cfg);

}

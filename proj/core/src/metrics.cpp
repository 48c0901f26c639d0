#include "sdgame/metrics.hpp"

namespace sdg {

double total_infections(const Trajectory& traj) {
    if (traj.days.empty()) throw NumericsError("empty trajectory");
    const DayRecord& last = traj.back();
    return (1.0 - last.state.s) + last.cum_reinfections;
}

double theta_sum(const Trajectory& traj) {
    double sum = 0.0;
    for (const DayRecord& d : traj.days) sum += d.theta;
    return sum;
}

std::pair<double, int> peak_stats(const Trajectory& traj) {
    if (traj.days.empty()) throw NumericsError("empty trajectory");
    double peak = traj.days[0].state.i;
    int day = 0;
    for (size_t k = 1; k < traj.days.size(); ++k) {
        if (traj.days[k].state.i > peak) {
            peak = traj.days[k].state.i;
            day = static_cast<int>(k);
        }
    }
    return {peak, day};
}

OutcomeSummary efficiency(const Trajectory& policy_run, const Trajectory& baseline_run) {
    if (policy_run.days.size() != baseline_run.days.size()) {
        throw NumericsError("policy and baseline trajectories cover different horizons");
    }
    const double z_base = total_infections(baseline_run);
    if (!(z_base > 0.0)) {
        throw NumericsError("baseline run has no infections; relative reduction is undefined");
    }
    const double theta_base = theta_sum(baseline_run);
    if (!(theta_base > 0.0)) throw NumericsError("baseline run has zero total activity");

    OutcomeSummary out;
    out.total_infections = total_infections(policy_run);
    out.z_hat = (z_base - out.total_infections) / z_base;
    out.activity_loss = (theta_base - theta_sum(policy_run)) / theta_base;
    if (out.activity_loss != 0.0) {
        out.efficiency = out.z_hat / out.activity_loss;
    }
    const auto [peak, day] = peak_stats(policy_run);
    out.peak_prevalence = peak;
    out.peak_day = day;
    return out;
}

} // namespace sdg

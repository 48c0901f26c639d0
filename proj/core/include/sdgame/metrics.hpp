#pragma once

#include <optional>
#include <utility>

#include "sdgame/simulate.hpp"

namespace sdg {

/// Scalar outcomes of one run, measured against a no-policy baseline.
struct OutcomeSummary {
    double total_infections = 0.0;     // Z: fraction ever infected
    double z_hat = 0.0;                // relative reduction in Z vs baseline
    double activity_loss = 0.0;        // relative loss of summed mean activity
    std::optional<double> efficiency;  // z_hat / activity_loss; empty when loss is 0
    double peak_prevalence = 0.0;
    int peak_day = 0;
};

/// Fraction of the population ever infected: 1 - s(T), plus the cumulative
/// reinfection inflow when the extension ran.
double total_infections(const Trajectory& traj);

/// Sum of the recorded population-mean activity over all recorded days.
double theta_sum(const Trajectory& traj);

/// Peak prevalence and its day (first day on ties).
std::pair<double, int> peak_stats(const Trajectory& traj);

/// Efficiency of a policy run against the no-policy baseline run: relative
/// infection reduction divided by relative activity loss. The baseline must
/// come from the same params and initial state with the (1, 0) policy.
/// Efficiency is left empty when the activity loss is exactly zero.
OutcomeSummary efficiency(const Trajectory& policy_run, const Trajectory& baseline_run);

} // namespace sdg

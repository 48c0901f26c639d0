#pragma once

#include <array>
#include <string>
#include <vector>

#include "sdgame/metrics.hpp"
#include "sdgame/simulate.hpp"

namespace sdg {

/// A batch of simulations over a policy grid. Every (alpha_tilde, c, phi)
/// combination runs once, plus a segmented variant (reduced recovered
/// penalty) per point when requested. The shared config supplies everything
/// else.
struct SweepSpec {
    std::vector<double> alpha_tilde_grid;
    std::vector<double> c_grid;
    std::vector<double> phi_grid;  // empty means "just the config's phi"
    bool segmented = false;
    double segmented_c_recovered = 0.1;
    SimulationConfig base;

    void validate() const; // throws ConfigError
};

struct SweepRow {
    double alpha_tilde = 1.0;
    double c = 0.0;
    double phi = 0.0;
    bool segmented = false;
    OutcomeSummary outcome;
    std::array<int, 4> case_days{}; // days spent in each equilibrium case
    std::string error;              // empty on success

    bool ok() const { return error.empty(); }
};

struct ResultTable {
    std::vector<SweepRow> rows; // sorted by (alpha_tilde, c, phi, segmented)
};

/// Runs the grid. Each point is measured against the (1,0) no-policy baseline
/// with the same phi. Per-point failures land in the row's error field and do
/// not abort the sweep. When trajectories is non-null it receives one entry
/// per row, in row order (failed rows leave an empty trajectory).
ResultTable run_sweep(const SweepSpec& spec, std::vector<Trajectory>* trajectories = nullptr);

/// One cell of the policy-plane equilibrium map at a fixed epidemic state.
struct EqMapCell {
    double c = 0.0;
    double alpha_tilde = 1.0;
    NashCase case_id = NashCase::case1;
    double si_level = 1.0; // pure level or mixed mean
    double recovered = 1.0;
    double p = 0.0; // probability of playing the cap
};

/// Classifies the whole (c, alpha_tilde) grid at one state. Cells come back
/// sorted by (c, alpha_tilde).
std::vector<EqMapCell> equilibrium_map(const EpidemicState& state,
                                       const std::vector<double>& alpha_tilde_grid,
                                       const std::vector<double>& c_grid,
                                       const ModelParams& params);

} // namespace sdg

#pragma once

#include <vector>

#include "sdgame/game.hpp"
#include "sdgame/model.hpp"

namespace sdg {

/// How the anticipated next-day state fed to the game is produced. The
/// current-state predictor is the default: it is the simplest self-consistent
/// reading, since tomorrow's state depends on the equilibrium being solved.
/// The one-step lookahead integrates a day under yesterday's equilibrium.
enum class PredictionMode {
    current_state,
    one_step_lookahead,
};

struct SimulationConfig {
    EpidemicState initial_state = EpidemicState::seeded(1e-4);
    ModelParams params;
    Policy policy; // fixed over the whole horizon
    int horizon = 365;
    PredictionMode prediction_mode = PredictionMode::current_state;
    bool reinfection_enabled = false;
    int substeps_per_day = 10;

    void validate() const; // throws ConfigError
};

/// One recorded day: the morning state, the equilibrium solved against the
/// predicted state, and the population-mean activity it implies.
struct DayRecord {
    EpidemicState state;
    Equilibrium equilibrium;
    double theta = 1.0;            // si_level*(s+i) + recovered_level*(r+reinfected)
    double cum_reinfections = 0.0; // running integral of the r -> reinfected flow
};

struct Trajectory {
    std::vector<DayRecord> days; // horizon + 1 records

    const DayRecord& back() const { return days.back(); }
    int horizon() const { return static_cast<int>(days.size()) - 1; }
    std::vector<double> prevalence() const; // i(t) per day
};

/// Population-mean activity for a state under an equilibrium's profile.
double mean_activity(const EpidemicState& state, const Equilibrium& eq);

/// The hat-state handed to the game. Current-state mode returns the state
/// unchanged; lookahead mode integrates one day under the previous
/// equilibrium's activities (all-1 on the first day, when there is none).
EpidemicState predict_state(const EpidemicState& state, const Equilibrium* prev_equilibrium,
                            const ModelParams& params, PredictionMode mode,
                            bool reinfection = false, int substeps = 10);

/// The daily closed loop: predict, solve the game, apply the equilibrium
/// profile, integrate one day, record. Deterministic for a given config.
Trajectory simulate(const SimulationConfig& config);

/// Same loop with the recovered-group penalty taken from the override policy
/// (a segmented policy, e.g. a lighter penalty for the immune).
Trajectory simulate_segmented(const SimulationConfig& config, const Policy& recovered_override);

} // namespace sdg

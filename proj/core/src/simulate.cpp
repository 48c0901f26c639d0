#include "sdgame/simulate.hpp"

#include <string>

namespace sdg {

void SimulationConfig::validate() const {
    initial_state.require_valid();
    params.validate();
    policy.validate();
    if (horizon < 1) throw ConfigError("horizon must be >= 1");
    if (substeps_per_day < 1) throw ConfigError("substeps_per_day must be >= 1");
}

std::vector<double> Trajectory::prevalence() const {
    std::vector<double> out;
    out.reserve(days.size());
    for (const DayRecord& d : days) out.push_back(d.state.i);
    return out;
}

double mean_activity(const EpidemicState& state, const Equilibrium& eq) {
    return eq.si_mean() * (state.s + state.i) +
           eq.recovered * (state.r + state.reinfected);
}

EpidemicState predict_state(const EpidemicState& state, const Equilibrium* prev_equilibrium,
                            const ModelParams& params, PredictionMode mode, bool reinfection,
                            int substeps) {
    if (mode == PredictionMode::current_state) return state;
    const ActivityProfile activities =
        prev_equilibrium ? prev_equilibrium->activities() : ActivityProfile::uniform(1.0);
    return step_with_flows(state, activities, params, 1.0, substeps, reinfection).state;
}

Trajectory simulate(const SimulationConfig& config) {
    config.validate();

    Trajectory traj;
    traj.days.reserve(static_cast<size_t>(config.horizon) + 1);

    EpidemicState state = config.initial_state;
    double cum_reinfections = 0.0;
    Equilibrium prev_eq;
    bool have_prev = false;

    for (int day = 0; day <= config.horizon; ++day) {
        try {
            const EpidemicState hat =
                predict_state(state, have_prev ? &prev_eq : nullptr, config.params,
                              config.prediction_mode, config.reinfection_enabled,
                              config.substeps_per_day);
            const GameContext ctx = GameContext::from_state(hat, config.params, config.policy);
            DayRecord rec;
            rec.state = state;
            rec.equilibrium = solve_equilibrium(ctx, config.policy);
            rec.theta = mean_activity(state, rec.equilibrium);
            rec.cum_reinfections = cum_reinfections;
            traj.days.push_back(rec);

            if (day < config.horizon) {
                const StepResult next =
                    step_with_flows(state, rec.equilibrium.activities(), config.params, 1.0,
                                    config.substeps_per_day, config.reinfection_enabled);
                state = next.state;
                cum_reinfections += next.flows.reinfections;
                prev_eq = rec.equilibrium;
                have_prev = true;
            }
        } catch (const NumericsError& err) {
            throw NumericsError("day " + std::to_string(day) + ": " + err.what());
        }
    }
    return traj;
}

Trajectory simulate_segmented(const SimulationConfig& config, const Policy& recovered_override) {
    SimulationConfig segmented = config;
    segmented.policy.c_recovered = recovered_override.c_recovered;
    return simulate(segmented);
}

} // namespace sdg

#include "sdgame/sweep.hpp"

#include <algorithm>
#include <map>

namespace sdg {

void SweepSpec::validate() const {
    base.validate();
    if (alpha_tilde_grid.empty()) throw ConfigError("sweep needs a nonempty alpha_tilde grid");
    if (c_grid.empty()) throw ConfigError("sweep needs a nonempty c grid");
    for (double a : alpha_tilde_grid) {
        if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("sweep alpha_tilde values must be in [0,1]");
    }
    for (double c : c_grid) {
        if (!(c >= 0.0)) throw ConfigError("sweep c values must be >= 0");
    }
    for (double phi : phi_grid) {
        if (!(phi >= 0.0 && phi <= 1.0)) throw ConfigError("sweep phi values must be in [0,1]");
    }
    if (segmented && !(segmented_c_recovered >= 0.0)) {
        throw ConfigError("segmented_c_recovered must be >= 0");
    }
}

namespace {

std::array<int, 4> case_histogram(const Trajectory& traj) {
    std::array<int, 4> hist{};
    for (const DayRecord& d : traj.days) {
        hist[static_cast<int>(d.equilibrium.case_id) - 1] += 1;
    }
    return hist;
}

} // namespace

ResultTable run_sweep(const SweepSpec& spec, std::vector<Trajectory>* trajectories) {
    spec.validate();

    std::vector<double> phis = spec.phi_grid;
    if (phis.empty()) phis.push_back(spec.base.params.phi);

    // One no-policy baseline per phi; every row reuses it.
    std::map<double, Trajectory> baselines;
    for (double phi : phis) {
        SimulationConfig cfg = spec.base;
        cfg.params.phi = phi;
        cfg.policy = Policy{1.0, 0.0};
        baselines.emplace(phi, simulate(cfg));
    }

    ResultTable table;
    if (trajectories) trajectories->clear();
    for (double alpha_tilde : spec.alpha_tilde_grid) {
        for (double c : spec.c_grid) {
            for (double phi : phis) {
                const int variants = spec.segmented ? 2 : 1;
                for (int variant = 0; variant < variants; ++variant) {
                    SweepRow row;
                    row.alpha_tilde = alpha_tilde;
                    row.c = c;
                    row.phi = phi;
                    row.segmented = variant == 1;

                    SimulationConfig cfg = spec.base;
                    cfg.params.phi = phi;
                    cfg.policy = row.segmented
                                     ? Policy{alpha_tilde, c, spec.segmented_c_recovered}
                                     : Policy{alpha_tilde, c};
                    Trajectory traj;
                    try {
                        traj = simulate(cfg);
                        row.outcome = efficiency(traj, baselines.at(phi));
                        row.case_days = case_histogram(traj);
                    } catch (const std::exception& err) {
                        row.error = err.what();
                        traj = Trajectory{};
                    }
                    table.rows.push_back(row);
                    if (trajectories) trajectories->push_back(std::move(traj));
                }
            }
        }
    }

    // Rows are generated in sorted order already when the grids are sorted;
    // sort anyway so the output is independent of grid ordering.
    std::vector<size_t> order(table.rows.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const SweepRow& ra = table.rows[a];
        const SweepRow& rb = table.rows[b];
        if (ra.alpha_tilde != rb.alpha_tilde) return ra.alpha_tilde < rb.alpha_tilde;
        if (ra.c != rb.c) return ra.c < rb.c;
        if (ra.phi != rb.phi) return ra.phi < rb.phi;
        return ra.segmented < rb.segmented;
    });
    ResultTable sorted;
    sorted.rows.reserve(table.rows.size());
    std::vector<Trajectory> sorted_trajs;
    if (trajectories) sorted_trajs.reserve(trajectories->size());
    for (size_t idx : order) {
        sorted.rows.push_back(table.rows[idx]);
        if (trajectories) sorted_trajs.push_back(std::move((*trajectories)[idx]));
    }
    if (trajectories) *trajectories = std::move(sorted_trajs);
    return sorted;
}

std::vector<EqMapCell> equilibrium_map(const EpidemicState& state,
                                       const std::vector<double>& alpha_tilde_grid,
                                       const std::vector<double>& c_grid,
                                       const ModelParams& params) {
    state.require_valid();
    if (alpha_tilde_grid.empty() || c_grid.empty()) {
        throw ConfigError("equilibrium map needs nonempty alpha_tilde and c grids");
    }

    std::vector<EqMapCell> cells;
    cells.reserve(alpha_tilde_grid.size() * c_grid.size());
    std::vector<double> cs = c_grid;
    std::sort(cs.begin(), cs.end());
    std::vector<double> alphas = alpha_tilde_grid;
    std::sort(alphas.begin(), alphas.end());

    for (double c : cs) {
        for (double alpha_tilde : alphas) {
            const Policy policy{alpha_tilde, c};
            const GameContext ctx = GameContext::from_state(state, params, policy);
            const Equilibrium eq = solve_equilibrium(ctx, policy);
            EqMapCell cell;
            cell.c = c;
            cell.alpha_tilde = alpha_tilde;
            cell.case_id = eq.case_id;
            cell.si_level = eq.si_mean();
            cell.recovered = eq.recovered;
            cell.p = eq.compliance_probability();
            cells.push_back(cell);
        }
    }
    return cells;
}

} // namespace sdg

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "sdgame/sweep.hpp"

using namespace sdg;

namespace {

SweepSpec small_spec() {
    SweepSpec spec;
    spec.alpha_tilde_grid = {0.4};
    spec.c_grid = {0.5};
    spec.base.horizon = 120;
    return spec;
}

} // namespace

TEST_CASE("a single-cell sweep equals the direct run") {
    const SweepSpec spec = small_spec();
    const ResultTable table = run_sweep(spec);
    REQUIRE(table.rows.size() == 1);
    const SweepRow& row = table.rows[0];
    CHECK(row.ok());

    SimulationConfig direct_cfg = spec.base;
    direct_cfg.policy = Policy{0.4, 0.5};
    const Trajectory direct = simulate(direct_cfg);
    SimulationConfig base_cfg = spec.base;
    base_cfg.policy = Policy{1.0, 0.0};
    const OutcomeSummary want = efficiency(direct, simulate(base_cfg));

    CHECK(row.outcome.total_infections == want.total_infections);
    CHECK(row.outcome.z_hat == want.z_hat);
    CHECK(row.outcome.activity_loss == want.activity_loss);
    CHECK(row.outcome.peak_prevalence == want.peak_prevalence);
    int total_days = 0;
    for (int n : row.case_days) total_days += n;
    CHECK(total_days == spec.base.horizon + 1);
}

TEST_CASE("rows come back sorted and rerunning a cell reproduces it") {
    SweepSpec spec = small_spec();
    spec.alpha_tilde_grid = {0.6, 0.2};
    spec.c_grid = {0.8, 0.3};
    const ResultTable table = run_sweep(spec);
    REQUIRE(table.rows.size() == 4);
    for (size_t k = 1; k < table.rows.size(); ++k) {
        const SweepRow& a = table.rows[k - 1];
        const SweepRow& b = table.rows[k];
        CHECK((a.alpha_tilde < b.alpha_tilde ||
               (a.alpha_tilde == b.alpha_tilde && a.c < b.c)));
    }

    // Purity: an isolated one-cell sweep reproduces the row bit for bit.
    SweepSpec cell = spec;
    cell.alpha_tilde_grid = {0.2};
    cell.c_grid = {0.8};
    const ResultTable single = run_sweep(cell);
    REQUIRE(single.rows.size() == 1);
    const SweepRow* match = nullptr;
    for (const SweepRow& row : table.rows) {
        if (row.alpha_tilde == 0.2 && row.c == 0.8) match = &row;
    }
    REQUIRE(match != nullptr);
    CHECK(single.rows[0].outcome.total_infections == match->outcome.total_infections);
    CHECK(single.rows[0].outcome.z_hat == match->outcome.z_hat);
    CHECK(single.rows[0].case_days == match->case_days);
}

TEST_CASE("phi grid and segmented variants multiply the rows") {
    SweepSpec spec = small_spec();
    spec.base.reinfection_enabled = true;
    spec.phi_grid = {0.0, 0.2};
    spec.segmented = true;
    spec.segmented_c_recovered = 0.1;
    std::vector<Trajectory> trajs;
    const ResultTable table = run_sweep(spec, &trajs);
    REQUIRE(table.rows.size() == 4); // 1 alpha x 1 c x 2 phi x {uniform, segmented}
    REQUIRE(trajs.size() == 4);
    for (size_t k = 0; k < table.rows.size(); ++k) {
        CHECK(table.rows[k].ok());
        CHECK(trajs[k].days.size() == static_cast<size_t>(spec.base.horizon) + 1);
    }
    // (phi, segmented) sorted within the cell: (0,0), (0,1), (0.2,0), (0.2,1)
    CHECK(table.rows[0].phi == 0.0);
    CHECK_FALSE(table.rows[0].segmented);
    CHECK(table.rows[1].phi == 0.0);
    CHECK(table.rows[1].segmented);
    CHECK(table.rows[3].segmented);
    // At phi = 0 the exemption helps; the uniform row has more infections.
    CHECK(table.rows[1].outcome.total_infections < table.rows[0].outcome.total_infections);
}

TEST_CASE("sweep validation") {
    SweepSpec spec = small_spec();
    spec.alpha_tilde_grid.clear();
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = small_spec();
    spec.c_grid = {-0.5};
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = small_spec();
    spec.phi_grid = {1.5};
    CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("equilibrium map partitions the policy plane") {
    const ModelParams params;
    const std::vector<double> alpha_grid = test::logspace(0.002, 1.0, 48);
    const std::vector<double> c_grid = {0.05, 0.1, 0.2, 0.4, 0.8, 1.2};

    for (const EpidemicState& state : {test::early_state(), test::peak_state()}) {
        const auto cells = equilibrium_map(state, alpha_grid, c_grid, params);
        REQUIRE(cells.size() == alpha_grid.size() * c_grid.size());

        // Cells with the cap above the voluntary level are all case 1.
        for (const EqMapCell& cell : cells) {
            const Policy policy{cell.alpha_tilde, cell.c};
            const GameContext ctx = GameContext::from_state(state, params, policy);
            if (alpha_bar(ctx) <= cell.alpha_tilde) CHECK(cell.case_id == NashCase::case1);
        }

        // No case interleaves along any grid line.
        auto runs_of = [](const std::vector<NashCase>& seq) {
            std::vector<NashCase> runs;
            for (NashCase c : seq) {
                if (runs.empty() || runs.back() != c) runs.push_back(c);
            }
            return runs;
        };
        for (double c : c_grid) {
            std::vector<NashCase> line;
            for (const EqMapCell& cell : cells) {
                if (cell.c == c) line.push_back(cell.case_id);
            }
            const auto runs = runs_of(line);
            std::vector<NashCase> unique_runs = runs;
            std::sort(unique_runs.begin(), unique_runs.end());
            unique_runs.erase(std::unique(unique_runs.begin(), unique_runs.end()),
                              unique_runs.end());
            CHECK(runs.size() == unique_runs.size());
        }
    }
}

TEST_CASE("walking the cap down at c = 0.8 crosses the regions in order") {
    const ModelParams params;
    const auto cells =
        equilibrium_map(test::peak_state(), test::logspace(0.002, 1.0, 64), {0.8}, params);
    std::vector<NashCase> seq;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
        if (seq.empty() || seq.back() != it->case_id) seq.push_back(it->case_id);
    }
    CHECK(seq == std::vector<NashCase>{NashCase::case1, NashCase::case3, NashCase::case4,
                                       NashCase::case2});
}

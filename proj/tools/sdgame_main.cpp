// Command line front end: simulate / sweep / eqmap / efficiency subcommands
// over a JSON config, writing CSV files into an output directory.
// Exit codes: 0 success, 1 config error, 2 numerical error, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdgame/config.hpp"
#include "sdgame/csv.hpp"
#include "sdgame/metrics.hpp"
#include "sdgame/simulate.hpp"
#include "sdgame/sweep.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out_dir, "Output directory (created if missing)")->required();
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path out(dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw sdg::IoError("cannot create output directory " + out.string());
    return out;
}

std::vector<double> parse_grid(const std::string& text, const std::string& name) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw sdg::ConfigError("cannot parse " + name + " entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw sdg::ConfigError(name + " must contain at least one value");
    return out;
}

std::string run_label(const sdg::SweepRow& row) {
    std::ostringstream os;
    os << "i[at=" << sdg::format_number(row.alpha_tilde) << ";c=" << sdg::format_number(row.c)
       << ";phi=" << sdg::format_number(row.phi) << ";seg=" << (row.segmented ? 1 : 0) << "]";
    return os.str();
}

int run_simulate(const CommonArgs& args) {
    const sdg::ExperimentConfig cfg = sdg::load_config(args.config_path);
    const fs::path out = prepare_out_dir(args.out_dir);
    const sdg::Trajectory traj = sdg::simulate(cfg.sim);
    sdg::export_trajectory(traj, out / cfg.output.trajectory);

    const auto [peak, peak_day] = sdg::peak_stats(traj);
    std::cout << "days=" << traj.horizon() << " Z=" << sdg::format_number(sdg::total_infections(traj))
              << " peak_i=" << sdg::format_number(peak) << " peak_day=" << peak_day << "\n"
              << "wrote " << (out / cfg.output.trajectory).string() << "\n";
    return 0;
}

int run_sweep_cmd(const CommonArgs& args) {
    const sdg::ExperimentConfig cfg = sdg::load_config(args.config_path);
    const fs::path out = prepare_out_dir(args.out_dir);

    std::vector<sdg::Trajectory> trajectories;
    const sdg::ResultTable table = sdg::run_sweep(cfg.sweep, &trajectories);
    sdg::export_sweep(table, out / cfg.output.sweep);

    std::vector<std::string> labels;
    std::vector<std::vector<double>> series;
    for (size_t k = 0; k < table.rows.size(); ++k) {
        if (!table.rows[k].ok()) continue;
        labels.push_back(run_label(table.rows[k]));
        series.push_back(trajectories[k].prevalence());
    }
    sdg::export_prevalence(labels, series, out / cfg.output.prevalence);

    int failed = 0;
    for (const auto& row : table.rows) failed += row.ok() ? 0 : 1;
    std::cout << "rows=" << table.rows.size() << " failed=" << failed << "\n"
              << "wrote " << (out / cfg.output.sweep).string() << "\n"
              << "wrote " << (out / cfg.output.prevalence).string() << "\n";
    return 0;
}

int run_eqmap(const CommonArgs& args, const std::string& state_arg) {
    const sdg::ExperimentConfig cfg = sdg::load_config(args.config_path);
    const fs::path out = prepare_out_dir(args.out_dir);

    const std::vector<double> parts = parse_grid(state_arg, "--state");
    if (parts.size() != 4 && parts.size() != 5) {
        throw sdg::ConfigError("--state needs s,i,q,r (optionally ,reinfected)");
    }
    sdg::EpidemicState state;
    state.s = parts[0];
    state.i = parts[1];
    state.q = parts[2];
    state.r = parts[3];
    state.reinfected = parts.size() == 5 ? parts[4] : 0.0;
    if (!state.valid()) throw sdg::ConfigError("--state fractions must be in [0,1] and sum to 1");

    const auto cells = sdg::equilibrium_map(state, cfg.sweep.alpha_tilde_grid, cfg.sweep.c_grid,
                                            cfg.sim.params);
    sdg::export_eqmap(cells, out / cfg.output.eqmap);
    std::cout << "cells=" << cells.size() << "\n"
              << "wrote " << (out / cfg.output.eqmap).string() << "\n";
    return 0;
}

int run_efficiency(const CommonArgs& args, const std::string& c_grid_arg) {
    const sdg::ExperimentConfig cfg = sdg::load_config(args.config_path);
    const fs::path out = prepare_out_dir(args.out_dir);
    const std::vector<double> c_grid = parse_grid(c_grid_arg, "--c-grid");

    sdg::SimulationConfig baseline_cfg = cfg.sim;
    baseline_cfg.policy = sdg::Policy{1.0, 0.0};
    const sdg::Trajectory baseline = sdg::simulate(baseline_cfg);

    std::vector<sdg::EfficiencyRow> rows;
    for (double c : c_grid) {
        sdg::SimulationConfig run_cfg = cfg.sim;
        run_cfg.policy = sdg::Policy{cfg.sim.policy.alpha_tilde, c};
        sdg::EfficiencyRow row;
        row.alpha_tilde = run_cfg.policy.alpha_tilde;
        row.c = c;
        row.outcome = sdg::efficiency(sdg::simulate(run_cfg), baseline);
        rows.push_back(row);
    }
    sdg::export_efficiency(rows, out / cfg.output.efficiency);
    std::cout << "rows=" << rows.size() << "\n"
              << "wrote " << (out / cfg.output.efficiency).string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled epidemic / social-distancing-game simulator"};
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args, eqmap_args, eff_args;
    std::string state_arg, c_grid_arg;

    CLI::App* sim_cmd = app.add_subcommand("simulate", "Run one simulation, write the trajectory");
    add_common(sim_cmd, sim_args);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run the policy grid from the config");
    add_common(sweep_cmd, sweep_args);

    CLI::App* eqmap_cmd =
        app.add_subcommand("eqmap", "Equilibrium case map over the (c, alpha_tilde) grid");
    add_common(eqmap_cmd, eqmap_args);
    eqmap_cmd->add_option("--state", state_arg, "Epidemic state as s,i,q,r")->required();

    CLI::App* eff_cmd =
        app.add_subcommand("efficiency", "Efficiency vs penalty at the config's alpha_tilde");
    add_common(eff_cmd, eff_args);
    eff_cmd->add_option("--c-grid", c_grid_arg, "Comma separated penalty values")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim_cmd->parsed()) return run_simulate(sim_args);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_args);
        if (eqmap_cmd->parsed()) return run_eqmap(eqmap_args, state_arg);
        if (eff_cmd->parsed()) return run_efficiency(eff_args, c_grid_arg);
    } catch (const sdg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const sdg::NumericsError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const sdg::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

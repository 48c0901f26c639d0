#pragma once

#include <filesystem>
#include <string>

#include "sdgame/sweep.hpp"

namespace sdg {

/// Output file names, relative to the CLI's --out directory.
struct OutputNames {
    std::string trajectory = "trajectory.csv";
    std::string sweep = "sweep.csv";
    std::string prevalence = "prevalence.csv";
    std::string eqmap = "eqmap.csv";
    std::string efficiency = "efficiency.csv";
};

/// Everything a run needs, loaded from one JSON file with sections
/// {params, initial_state, policy, sweep, output}. Every field has a default
/// (the headline calibration), so "{}" is a valid config.
struct ExperimentConfig {
    SimulationConfig sim;
    SweepSpec sweep;
    OutputNames output;
};

ExperimentConfig default_config();

/// Parses and validates; unknown keys and out-of-domain values raise
/// ConfigError with the offending key in the message.
ExperimentConfig parse_config(const std::string& json_text);

ExperimentConfig load_config(const std::filesystem::path& file);

} // namespace sdg

#include "sdgame/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sdg {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" in section \"" + section + "\"");
        }
    }
}

double as_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("\"" + key + "\" must be a number");
    return v.get<double>();
}

std::vector<double> as_number_list(const json& v, const std::string& key) {
    if (!v.is_array()) throw ConfigError("\"" + key + "\" must be an array of numbers");
    std::vector<double> out;
    for (const auto& item : v) out.push_back(as_number(item, key));
    return out;
}

void parse_params(const json& obj, SimulationConfig& sim) {
    reject_unknown_keys(obj, "params",
                        {"r0", "beta", "gamma1", "gamma2", "d", "phi", "horizon",
                         "prediction_mode", "reinfection", "substeps_per_day"});
    ModelParams& p = sim.params;
    if (obj.contains("gamma1")) p.gamma1 = as_number(obj["gamma1"], "gamma1");
    if (obj.contains("gamma2")) p.gamma2 = as_number(obj["gamma2"], "gamma2");
    if (obj.contains("r0")) p.beta = as_number(obj["r0"], "r0") * p.gamma1;
    if (obj.contains("beta")) p.beta = as_number(obj["beta"], "beta");
    if (obj.contains("d")) p.d = as_number(obj["d"], "d");
    if (obj.contains("phi")) p.phi = as_number(obj["phi"], "phi");
    if (obj.contains("horizon")) {
        if (!obj["horizon"].is_number_integer()) throw ConfigError("\"horizon\" must be an integer");
        sim.horizon = obj["horizon"].get<int>();
    }
    if (obj.contains("substeps_per_day")) {
        if (!obj["substeps_per_day"].is_number_integer()) {
            throw ConfigError("\"substeps_per_day\" must be an integer");
        }
        sim.substeps_per_day = obj["substeps_per_day"].get<int>();
    }
    if (obj.contains("prediction_mode")) {
        const std::string mode = obj["prediction_mode"].get<std::string>();
        if (mode == "current-state") {
            sim.prediction_mode = PredictionMode::current_state;
        } else if (mode == "one-step-lookahead") {
            sim.prediction_mode = PredictionMode::one_step_lookahead;
        } else {
            throw ConfigError("prediction_mode must be \"current-state\" or "
                              "\"one-step-lookahead\", got \"" + mode + "\"");
        }
    }
    if (obj.contains("reinfection")) {
        if (!obj["reinfection"].is_boolean()) throw ConfigError("\"reinfection\" must be a bool");
        sim.reinfection_enabled = obj["reinfection"].get<bool>();
    }
}

void parse_initial_state(const json& obj, SimulationConfig& sim) {
    reject_unknown_keys(obj, "initial_state", {"s", "i", "q", "r", "reinfected"});
    EpidemicState st;
    st.i = obj.contains("i") ? as_number(obj["i"], "i") : 1e-4;
    st.q = obj.contains("q") ? as_number(obj["q"], "q") : 0.0;
    st.r = obj.contains("r") ? as_number(obj["r"], "r") : 0.0;
    st.reinfected = obj.contains("reinfected") ? as_number(obj["reinfected"], "reinfected") : 0.0;
    st.s = obj.contains("s") ? as_number(obj["s"], "s")
                             : 1.0 - st.i - st.q - st.r - st.reinfected;
    if (!st.valid()) {
        throw ConfigError("initial_state fractions must be in [0,1] and sum to 1");
    }
    sim.initial_state = st;
}

void parse_policy(const json& obj, SimulationConfig& sim) {
    reject_unknown_keys(obj, "policy", {"alpha_tilde", "c", "c_recovered"});
    double alpha_tilde = obj.contains("alpha_tilde") ? as_number(obj["alpha_tilde"], "alpha_tilde")
                                                     : 1.0;
    double c = obj.contains("c") ? as_number(obj["c"], "c") : 0.0;
    sim.policy = obj.contains("c_recovered")
                     ? Policy{alpha_tilde, c, as_number(obj["c_recovered"], "c_recovered")}
                     : Policy{alpha_tilde, c};
}

void parse_sweep(const json& obj, SweepSpec& sweep) {
    reject_unknown_keys(obj, "sweep",
                        {"alpha_tilde", "c", "phi", "segmented", "segmented_c_recovered"});
    if (obj.contains("alpha_tilde")) {
        sweep.alpha_tilde_grid = as_number_list(obj["alpha_tilde"], "sweep.alpha_tilde");
    }
    if (obj.contains("c")) sweep.c_grid = as_number_list(obj["c"], "sweep.c");
    if (obj.contains("phi")) sweep.phi_grid = as_number_list(obj["phi"], "sweep.phi");
    if (obj.contains("segmented")) {
        if (!obj["segmented"].is_boolean()) throw ConfigError("\"segmented\" must be a bool");
        sweep.segmented = obj["segmented"].get<bool>();
    }
    if (obj.contains("segmented_c_recovered")) {
        sweep.segmented_c_recovered =
            as_number(obj["segmented_c_recovered"], "segmented_c_recovered");
    }
}

void parse_output(const json& obj, OutputNames& output) {
    reject_unknown_keys(obj, "output",
                        {"trajectory", "sweep", "prevalence", "eqmap", "efficiency"});
    if (obj.contains("trajectory")) output.trajectory = obj["trajectory"].get<std::string>();
    if (obj.contains("sweep")) output.sweep = obj["sweep"].get<std::string>();
    if (obj.contains("prevalence")) output.prevalence = obj["prevalence"].get<std::string>();
    if (obj.contains("eqmap")) output.eqmap = obj["eqmap"].get<std::string>();
    if (obj.contains("efficiency")) output.efficiency = obj["efficiency"].get<std::string>();
}

} // namespace

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    // Policy-grid defaults give the standard penalty sweep out of the box.
    cfg.sweep.alpha_tilde_grid = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5,
                                  0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0};
    cfg.sweep.c_grid = {0.5};
    cfg.sweep.base = cfg.sim;
    return cfg;
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(root, "(root)", {"params", "initial_state", "policy", "sweep", "output"});

    ExperimentConfig cfg = default_config();
    try {
        if (root.contains("params")) parse_params(root["params"], cfg.sim);
        if (root.contains("initial_state")) parse_initial_state(root["initial_state"], cfg.sim);
        if (root.contains("policy")) parse_policy(root["policy"], cfg.sim);
        if (root.contains("sweep")) parse_sweep(root["sweep"], cfg.sweep);
        if (root.contains("output")) parse_output(root["output"], cfg.output);
    } catch (const json::exception& err) {
        throw ConfigError(std::string("malformed config value: ") + err.what());
    }
    cfg.sweep.base = cfg.sim;
    cfg.sim.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw IoError("cannot open config file " + file.string());
    std::ostringstream buffer;
    buffer << is.rdbuf();
    return parse_config(buffer.str());
}

} // namespace sdg

#include "sdgame/model.hpp"

#include <cmath>
#include <string>

namespace sdg {

namespace {

bool unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

} // namespace

bool EpidemicState::valid() const {
    return unit_interval(s) && unit_interval(i) && unit_interval(q) && unit_interval(r) &&
           unit_interval(reinfected) && std::abs(mass() - 1.0) <= kMassTolerance;
}

void EpidemicState::require_valid() const {
    if (!valid()) {
        throw NumericsError("invalid epidemic state at t=" + std::to_string(t) +
                            " (fractions outside [0,1] or mass " + std::to_string(mass()) +
                            " != 1)");
    }
}

EpidemicState EpidemicState::seeded(double i0) {
    if (i0 < 0.0 || i0 > 1.0) {
        throw ConfigError("initial infected fraction must be in [0,1]");
    }
    EpidemicState st;
    st.s = 1.0 - i0;
    st.i = i0;
    return st;
}

void ModelParams::validate() const {
    if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
    if (!(gamma1 > 0.0)) throw ConfigError("gamma1 must be > 0");
    if (!(gamma2 > 0.0)) throw ConfigError("gamma2 must be > 0");
    if (!(d >= 0.0)) throw ConfigError("d must be >= 0");
    if (!(phi >= 0.0 && phi <= 1.0)) throw ConfigError("phi must be in [0,1]");
}

ActivityProfile ActivityProfile::uniform(double level) {
    return ActivityProfile{level, level, level, level};
}

ActivityProfile ActivityProfile::grouped(double si_level, double r_level) {
    return ActivityProfile{si_level, si_level, r_level, r_level};
}

bool ActivityProfile::valid() const {
    auto in_range = [](double a) { return a > 0.0 && a <= 1.0; };
    return in_range(susceptible) && in_range(infected) && in_range(recovered) &&
           in_range(reinfected) && susceptible == infected && recovered == reinfected;
}

void ActivityProfile::require_valid() const {
    if (!valid()) {
        throw NumericsError("invalid activity profile (levels must be in (0,1], with "
                            "susceptible==infected and recovered==reinfected)");
    }
}

namespace {

struct Rhs {
    StateDelta delta;
    double infection_flow = 0.0;
    double reinfection_flow = 0.0;
};

Rhs base_rhs(const EpidemicState& st, const ActivityProfile& a, const ModelParams& p) {
    const double pool = a.susceptible * st.s + a.infected * st.i + a.recovered * st.r;
    if (!(pool > 0.0)) {
        throw NumericsError("empty mixing pool: no active compartments at t=" +
                            std::to_string(st.t));
    }
    const double force = p.beta * (a.susceptible * st.s) * (a.infected * st.i) / pool;
    Rhs out;
    out.infection_flow = force;
    out.delta.ds = -force;
    out.delta.di = force - p.gamma1 * st.i;
    out.delta.dq = p.gamma1 * st.i - p.gamma2 * st.q;
    out.delta.dr = p.gamma2 * st.q;
    out.delta.dreinfected = 0.0;
    return out;
}

Rhs reinfection_rhs(const EpidemicState& st, const ActivityProfile& a, const ModelParams& p) {
    const double infectious = a.infected * st.i + a.reinfected * st.reinfected;
    const double pool = a.susceptible * st.s + a.infected * st.i + a.recovered * st.r +
                        a.reinfected * st.reinfected;
    if (!(pool > 0.0)) {
        throw NumericsError("empty mixing pool: no active compartments at t=" +
                            std::to_string(st.t));
    }
    const double force = p.beta * (a.susceptible * st.s) * infectious / pool;
    const double reinfection_force = p.beta * p.phi * (a.recovered * st.r) * infectious / pool;
    Rhs out;
    out.infection_flow = force;
    out.reinfection_flow = reinfection_force;
    out.delta.ds = -force;
    out.delta.di = force - p.gamma1 * st.i;
    out.delta.dq = p.gamma1 * (st.i + st.reinfected) - p.gamma2 * st.q;
    out.delta.dr = p.gamma2 * st.q - reinfection_force;
    out.delta.dreinfected = reinfection_force - p.gamma1 * st.reinfected;
    return out;
}

Rhs rhs(const EpidemicState& st, const ActivityProfile& a, const ModelParams& p, bool reinfection) {
    return reinfection ? reinfection_rhs(st, a, p) : base_rhs(st, a, p);
}

EpidemicState offset(const EpidemicState& st, const StateDelta& d, double h) {
    EpidemicState out = st;
    out.s += h * d.ds;
    out.i += h * d.di;
    out.q += h * d.dq;
    out.r += h * d.dr;
    out.reinfected += h * d.dreinfected;
    out.t += h;
    return out;
}

double clamp_component(double v, double t, const char* name) {
    if (v < 0.0) {
        if (v < -EpidemicState::kMassTolerance) {
            throw NumericsError(std::string("integration pushed ") + name + " to " +
                                std::to_string(v) + " at t=" + std::to_string(t) +
                                "; reduce the step size");
        }
        return 0.0;
    }
    if (v > 1.0) {
        if (v > 1.0 + EpidemicState::kMassTolerance) {
            throw NumericsError(std::string("integration pushed ") + name + " to " +
                                std::to_string(v) + " at t=" + std::to_string(t) +
                                "; reduce the step size");
        }
        return 1.0;
    }
    return v;
}

} // namespace

double transmission_force(const EpidemicState& state, const ActivityProfile& activities,
                          const ModelParams& params) {
    return base_rhs(state, activities, params).infection_flow;
}

StateDelta derivatives(const EpidemicState& state, const ActivityProfile& activities,
                       const ModelParams& params) {
    return base_rhs(state, activities, params).delta;
}

StateDelta reinfection_derivatives(const EpidemicState& state, const ActivityProfile& activities,
                                   const ModelParams& params) {
    return reinfection_rhs(state, activities, params).delta;
}

StepResult step_with_flows(const EpidemicState& state, const ActivityProfile& activities,
                           const ModelParams& params, double dt, int substeps, bool reinfection) {
    if (!(dt > 0.0)) throw NumericsError("step requires dt > 0");
    activities.require_valid();
    if (substeps <= 0) {
        substeps = static_cast<int>(dt / 0.1 + 0.5);
        if (substeps < 1) substeps = 1;
    }
    const double h = dt / substeps;

    StepResult out;
    out.state = state;
    for (int n = 0; n < substeps; ++n) {
        const Rhs k1 = rhs(out.state, activities, params, reinfection);
        const Rhs k2 = rhs(offset(out.state, k1.delta, 0.5 * h), activities, params, reinfection);
        const Rhs k3 = rhs(offset(out.state, k2.delta, 0.5 * h), activities, params, reinfection);
        const Rhs k4 = rhs(offset(out.state, k3.delta, h), activities, params, reinfection);

        auto blend = [h](double a, double b, double c, double d) {
            return h / 6.0 * (a + 2.0 * b + 2.0 * c + d);
        };
        EpidemicState next = out.state;
        next.s += blend(k1.delta.ds, k2.delta.ds, k3.delta.ds, k4.delta.ds);
        next.i += blend(k1.delta.di, k2.delta.di, k3.delta.di, k4.delta.di);
        next.q += blend(k1.delta.dq, k2.delta.dq, k3.delta.dq, k4.delta.dq);
        next.r += blend(k1.delta.dr, k2.delta.dr, k3.delta.dr, k4.delta.dr);
        next.reinfected += blend(k1.delta.dreinfected, k2.delta.dreinfected, k3.delta.dreinfected,
                                 k4.delta.dreinfected);
        next.t = out.state.t + h;

        next.s = clamp_component(next.s, next.t, "s");
        next.i = clamp_component(next.i, next.t, "i");
        next.q = clamp_component(next.q, next.t, "q");
        next.r = clamp_component(next.r, next.t, "r");
        next.reinfected = clamp_component(next.reinfected, next.t, "reinfected");

        out.flows.infections +=
            blend(k1.infection_flow, k2.infection_flow, k3.infection_flow, k4.infection_flow);
        out.flows.reinfections += blend(k1.reinfection_flow, k2.reinfection_flow,
                                        k3.reinfection_flow, k4.reinfection_flow);
        out.state = next;
    }
    out.state.require_valid();
    return out;
}

EpidemicState step(const EpidemicState& state, const ActivityProfile& activities,
                   const ModelParams& params, double dt, bool reinfection) {
    return step_with_flows(state, activities, params, dt, 0, reinfection).state;
}

} // namespace sdg

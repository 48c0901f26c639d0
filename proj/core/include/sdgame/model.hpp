#pragma once

#include "sdgame/errors.hpp"

namespace sdg {

/// Compartment fractions of a closed population at one point in time.
/// Susceptible, infected (unaware, still circulating), quarantined (isolated,
/// removed from all mixing), recovered, and reinfected (zero unless the
/// reinfection extension is enabled). Fractions are in [0,1] and sum to 1.
struct EpidemicState {
    double s = 1.0;
    double i = 0.0;
    double q = 0.0;
    double r = 0.0;
    double reinfected = 0.0;
    double t = 0.0; // days

    static constexpr double kMassTolerance = 1e-9;

    double mass() const { return s + i + q + r + reinfected; }
    bool valid() const;
    void require_valid() const; // throws NumericsError

    /// s = 1 - i0, everything else empty.
    static EpidemicState seeded(double i0);
};

/// Epidemiological rate constants plus the behavioral sensitivity d.
/// beta bundles contact rate and per-contact transmission probability; the
/// two never appear separately in any formula we evaluate.
struct ModelParams {
    double beta = 3.1 / 7.0;    // transmission rate, per day
    double gamma1 = 1.0 / 7.0;  // infected -> quarantined, per day
    double gamma2 = 1.0 / 14.0; // quarantined -> recovered, per day
    double d = 1858.0;          // utility cost per unit infection probability
    double phi = 0.0;           // reinfection transmission scale, in [0,1]

    double r0() const { return beta / gamma1; }
    double beta_d() const { return beta * d; }
    void validate() const; // throws ConfigError
};

/// Per-group activity levels in (0,1]. Infected individuals do not know they
/// are infected and act exactly like susceptibles; reinfected individuals act
/// exactly like recovered. The factories keep those pairs locked together.
struct ActivityProfile {
    double susceptible = 1.0;
    double infected = 1.0;
    double recovered = 1.0;
    double reinfected = 1.0;

    static ActivityProfile uniform(double level);
    static ActivityProfile grouped(double si_level, double r_level);

    bool valid() const;
    void require_valid() const; // throws NumericsError
};

/// Per-day derivative of each compartment. Sums to zero: the population is
/// closed.
struct StateDelta {
    double ds = 0.0;
    double di = 0.0;
    double dq = 0.0;
    double dr = 0.0;
    double dreinfected = 0.0;

    double sum() const { return ds + di + dq + dr + dreinfected; }
};

/// New-infection flow -ds/dt under the activity-adjusted mixing:
///   beta * (a_s s)(a_i i) / (a_s s + a_i i + a_r r).
/// Quarantined individuals are excluded from the mixing pool. Throws
/// NumericsError when the pool is empty.
double transmission_force(const EpidemicState& state, const ActivityProfile& activities,
                          const ModelParams& params);

/// Base model right-hand side: s -> i -> q -> r, with the reinfected
/// compartment frozen.
StateDelta derivatives(const EpidemicState& state, const ActivityProfile& activities,
                       const ModelParams& params);

/// Extended right-hand side with a recovered -> reinfected flow. Reinfected
/// individuals mix at the recovered activity level but transmit like the
/// infected; acquisition from the recovered side is scaled by phi. They exit
/// to quarantine at gamma1 like first-time infections. With phi = 0 and an
/// empty reinfected compartment this reduces exactly to derivatives().
StateDelta reinfection_derivatives(const EpidemicState& state, const ActivityProfile& activities,
                                   const ModelParams& params);

/// Time-integrated flows over one integration call.
struct DayFlows {
    double infections = 0.0;   // integral of the s -> i flow
    double reinfections = 0.0; // integral of the r -> reinfected flow
};

struct StepResult {
    EpidemicState state;
    DayFlows flows;
};

/// Advance the state by dt days with fixed-step classical RK4. substeps == 0
/// picks one substep per 0.1 day (the default integration grid). Compartments
/// that stray outside [0,1] by at most kMassTolerance are clamped back;
/// larger excursions throw NumericsError, which signals a too-coarse step.
StepResult step_with_flows(const EpidemicState& state, const ActivityProfile& activities,
                           const ModelParams& params, double dt, int substeps = 0,
                           bool reinfection = false);

EpidemicState step(const EpidemicState& state, const ActivityProfile& activities,
                   const ModelParams& params, double dt, bool reinfection = false);

} // namespace sdg

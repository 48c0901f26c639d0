#pragma once

#include <variant>
#include <vector>

#include "sdgame/model.hpp"

namespace sdg {

/// A social distancing policy: a mandated activity cap and the utility
/// penalty for exceeding it. The recovered group can carry its own penalty
/// (a segmented policy, e.g. exempting the immune); it defaults to c.
struct Policy {
    double alpha_tilde = 1.0;
    double c = 0.0;
    double c_recovered = 0.0;

    Policy() = default;
    Policy(double alpha_tilde_, double c_) : alpha_tilde(alpha_tilde_), c(c_), c_recovered(c_) {}
    Policy(double alpha_tilde_, double c_, double c_recovered_)
        : alpha_tilde(alpha_tilde_), c(c_), c_recovered(c_recovered_) {}

    void validate() const; // throws ConfigError
};

/// What an individual knows when choosing an activity level: the anticipated
/// compartment fractions, the recovered group's activity, and the risk
/// coefficient beta*d. Quarantined individuals never enter the mixing terms,
/// but q_hat is kept so the fractions account for the whole population.
struct GameContext {
    double s_hat = 1.0;
    double i_hat = 0.0;
    double q_hat = 0.0;
    double r_hat = 0.0;
    double alpha_r_star = 1.0;
    double beta_d = 0.0;

    /// Builds the context for a (predicted) state: the recovered level comes
    /// from their closed-form decision, and the reinfected fraction is folded
    /// into r_hat -- nobody can tell a reinfected individual from a recovered
    /// one, and they mix at the same activity level.
    static GameContext from_state(const EpidemicState& hat, const ModelParams& params,
                                  const Policy& policy);

    void validate() const; // throws NumericsError
};

/// The four mutually exclusive equilibrium regimes of the per-day game.
enum class NashCase : int {
    case1 = 1, // cap is above the voluntary level; everyone plays alpha_bar
    case2 = 2, // penalty too weak to bind; everyone defects to alpha_bar
    case3 = 3, // full compliance at the cap
    case4 = 4, // mixed: the cap with probability p, the utility vertex otherwise
};

const char* to_string(NashCase c);

struct PureStrategy {
    double level = 1.0;
};

/// Randomize between the cap (probability p) and the vertex high = g*(mean).
struct MixedStrategy {
    double low = 0.0;  // the cap alpha_tilde
    double high = 1.0; // g*(mean)
    double p = 0.0;
    double mean = 0.0; // p*low + (1-p)*high
};

/// One day's solved activity profile: the recovered level plus the common
/// susceptible/infected strategy.
struct Equilibrium {
    NashCase case_id = NashCase::case1;
    double recovered = 1.0;
    std::variant<PureStrategy, MixedStrategy> si = PureStrategy{};
    double residual = 0.0; // indifference residual; 0 for pure strategies

    bool is_mixed() const { return std::holds_alternative<MixedStrategy>(si); }
    /// Pure level, or the mixed-strategy mean that drives the dynamics.
    double si_mean() const;
    /// Probability of playing the cap: 0 in cases 1-2, 1 in case 3, p in case 4.
    double compliance_probability() const;
    ActivityProfile activities() const;
};

/// Closed-form decision of a recovered individual: comply with the cap when
/// log(a~) - a~ + 1 > -c_recovered, otherwise ignore it and play 1. A cap of
/// zero means compliance is infinitely costly, so the answer is 1.
double recovered_best(const Policy& policy);

/// Utility of a susceptible/infected individual playing alpha_j against the
/// group level alpha_minus: activity pleasure log(a)-a+1, minus the penalty
/// when strictly above the cap, minus perceived infection risk.
double utility_si(double alpha_j, double alpha_minus, const GameContext& ctx,
                  const Policy& policy);

/// Vertex of the smooth part of the utility: the unconstrained best activity
/// against a group playing alpha_minus. Always in (0,1].
double g_star(double alpha_minus, const GameContext& ctx);

/// Fixed point of g_star: the voluntary distancing level that emerges with no
/// enforceable policy. Positive root of the fixed-point quadratic.
double alpha_bar(const GameContext& ctx);

struct MixedSolution {
    double mean = 0.0;
    double p = 0.0;
    double residual = 0.0;
};

/// Solves the indifference condition u(a~, m) = u(g*(m), m) for the mixed
/// mean m in (a~, alpha_bar) by bisection; the gap is nondecreasing on that
/// bracket, so the root is unique. Throws NumericsError when the bracket does
/// not straddle zero (case misclassification upstream).
MixedSolution mixed_equilibrium(const GameContext& ctx, const Policy& policy);

/// Classifies the day into exactly one of the four cases and returns the
/// equilibrium. Tie-breaking: case 2 and case 3 take >=, case 4 requires
/// both strict inequalities.
Equilibrium solve_equilibrium(const GameContext& ctx, const Policy& policy);

/// Exhaustive grid search over (0,1] plus the candidate points {a~, g*}:
/// returns every utility maximizer within 1e-9 of the best, ascending. Test
/// oracle for the closed-form best response; deterministic.
std::vector<double> best_response_oracle(double alpha_minus, const GameContext& ctx,
                                         const Policy& policy, long grid_n);

/// Inverts the fixed-point condition g*(a) = a for the sensitivity d given an
/// observed voluntary level in (0,1). Round-trips through alpha_bar exactly.
double estimate_sensitivity(double observed_alpha_bar, double s_hat, double i_hat, double r_hat,
                            double alpha_r_star, double beta);

} // namespace sdg

#include "sdgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sdg {

namespace {

/// Pleasure from social activity, zero at full activity.
double activity_utility(double a) { return std::log(a) - a + 1.0; }

/// Marginal infection-risk cost per unit of own activity.
double risk_coefficient(double alpha_minus, const GameContext& ctx) {
    const double pool = alpha_minus * (ctx.s_hat + ctx.i_hat) + ctx.alpha_r_star * ctx.r_hat;
    return ctx.beta_d * alpha_minus * ctx.i_hat / pool;
}

} // namespace

void Policy::validate() const {
    if (!(alpha_tilde >= 0.0 && alpha_tilde <= 1.0)) {
        throw ConfigError("alpha_tilde must be in [0,1]");
    }
    if (!(c >= 0.0)) throw ConfigError("c must be >= 0");
    if (!(c_recovered >= 0.0)) throw ConfigError("c_recovered must be >= 0");
}

GameContext GameContext::from_state(const EpidemicState& hat, const ModelParams& params,
                                    const Policy& policy) {
    GameContext ctx;
    ctx.s_hat = hat.s;
    ctx.i_hat = hat.i;
    ctx.q_hat = hat.q;
    ctx.r_hat = hat.r + hat.reinfected;
    ctx.alpha_r_star = recovered_best(policy);
    ctx.beta_d = params.beta_d();
    return ctx;
}

void GameContext::validate() const {
    const double mass = s_hat + i_hat + q_hat + r_hat;
    if (std::abs(mass - 1.0) > EpidemicState::kMassTolerance) {
        throw NumericsError("game context fractions sum to " + std::to_string(mass));
    }
    if (!(alpha_r_star > 0.0 && alpha_r_star <= 1.0)) {
        throw NumericsError("alpha_r_star must be in (0,1]");
    }
    if (!(beta_d >= 0.0)) throw NumericsError("beta_d must be >= 0");
}

const char* to_string(NashCase c) {
    switch (c) {
    case NashCase::case1: return "case1";
    case NashCase::case2: return "case2";
    case NashCase::case3: return "case3";
    case NashCase::case4: return "case4";
    }
    return "?";
}

double Equilibrium::si_mean() const {
    if (const auto* mixed = std::get_if<MixedStrategy>(&si)) return mixed->mean;
    return std::get<PureStrategy>(si).level;
}

double Equilibrium::compliance_probability() const {
    if (const auto* mixed = std::get_if<MixedStrategy>(&si)) return mixed->p;
    return case_id == NashCase::case3 ? 1.0 : 0.0;
}

ActivityProfile Equilibrium::activities() const {
    return ActivityProfile::grouped(si_mean(), recovered);
}

double recovered_best(const Policy& policy) {
    const double cap = policy.alpha_tilde;
    if (cap <= 0.0) return 1.0; // log utility forbids zero activity
    return activity_utility(cap) > -policy.c_recovered ? cap : 1.0;
}

double utility_si(double alpha_j, double alpha_minus, const GameContext& ctx,
                  const Policy& policy) {
    if (!(alpha_j > 0.0)) {
        throw NumericsError("utility is undefined at activity level " + std::to_string(alpha_j));
    }
    double u = activity_utility(alpha_j) - alpha_j * risk_coefficient(alpha_minus, ctx);
    if (alpha_j > policy.alpha_tilde) u -= policy.c;
    return u;
}

double g_star(double alpha_minus, const GameContext& ctx) {
    const double pool = alpha_minus * (ctx.s_hat + ctx.i_hat) + ctx.alpha_r_star * ctx.r_hat;
    return pool / (pool + ctx.beta_d * alpha_minus * ctx.i_hat);
}

double alpha_bar(const GameContext& ctx) {
    const double active = ctx.s_hat + ctx.i_hat;
    if (!(active > 0.0)) {
        throw NumericsError("alpha_bar is undefined once nobody is susceptible or infected");
    }
    if (ctx.beta_d * ctx.i_hat == 0.0) return 1.0; // g* is identically 1
    // Positive root of (active + beta_d*i)a^2 + (rpool - active)a - rpool = 0,
    // the fixed-point condition g*(a) = a. Clamp the round-off overshoot so
    // the result stays a legal activity level.
    const double rpool = ctx.alpha_r_star * ctx.r_hat;
    const double denom = active + ctx.beta_d * ctx.i_hat;
    const double shift = active - rpool;
    const double root = (shift + std::sqrt(shift * shift + 4.0 * rpool * denom)) / (2.0 * denom);
    return std::min(root, 1.0);
}

namespace {

/// Utility advantage of complying over playing the vertex, against a group
/// mean alpha. Nondecreasing wherever g*(alpha) > alpha_tilde.
double compliance_gap(double alpha, const GameContext& ctx, const Policy& policy) {
    return utility_si(policy.alpha_tilde, alpha, ctx, policy) -
           utility_si(g_star(alpha, ctx), alpha, ctx, policy);
}

} // namespace

MixedSolution mixed_equilibrium(const GameContext& ctx, const Policy& policy) {
    const double cap = policy.alpha_tilde;
    double lo = cap + 1e-12;
    double hi = alpha_bar(ctx);
    const double gap_lo = compliance_gap(lo, ctx, policy);
    const double gap_hi = compliance_gap(hi, ctx, policy);
    if (!(gap_lo < 0.0) || !(gap_hi > 0.0)) {
        throw NumericsError("mixed equilibrium bracket does not straddle zero "
                            "(case misclassification upstream)");
    }
    // The gap is monotone on the bracket, so plain bisection is safe. Keep
    // halving past the nominal 1e-12 width until the residual is far below
    // the 1e-10 contract; steep gaps (large beta_d, thin pools) need it.
    double mid = 0.5 * (lo + hi);
    double gap_mid = compliance_gap(mid, ctx, policy);
    for (int it = 0; it < 200 && hi - lo > 1e-15 && std::abs(gap_mid) > 1e-12; ++it) {
        if (gap_mid < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        gap_mid = compliance_gap(mid, ctx, policy);
    }

    MixedSolution sol;
    sol.mean = mid;
    sol.residual = std::abs(gap_mid);
    const double high = g_star(mid, ctx);
    sol.p = (high - mid) / (high - cap);
    if (sol.residual > 1e-10) {
        throw NumericsError("mixed equilibrium residual " + std::to_string(sol.residual) +
                            " exceeds tolerance");
    }
    return sol;
}

Equilibrium solve_equilibrium(const GameContext& ctx, const Policy& policy) {
    ctx.validate();
    Equilibrium eq;
    eq.recovered = recovered_best(policy);

    const double cap = policy.alpha_tilde;
    const double bar = alpha_bar(ctx);

    // A zero cap makes the penalty unavoidable for any positive activity, so
    // it cancels out of every comparison and the voluntary level wins.
    if (cap <= 0.0) {
        eq.case_id = NashCase::case2;
        eq.si = PureStrategy{bar};
        return eq;
    }

    if (bar <= cap) {
        eq.case_id = NashCase::case1;
        eq.si = PureStrategy{bar};
        return eq;
    }
    if (utility_si(bar, bar, ctx, policy) >= utility_si(cap, bar, ctx, policy)) {
        eq.case_id = NashCase::case2;
        eq.si = PureStrategy{bar};
        return eq;
    }
    if (utility_si(cap, cap, ctx, policy) >=
        utility_si(g_star(cap, ctx), cap, ctx, policy)) {
        eq.case_id = NashCase::case3;
        eq.si = PureStrategy{cap};
        return eq;
    }

    const MixedSolution sol = mixed_equilibrium(ctx, policy);
    eq.case_id = NashCase::case4;
    eq.si = MixedStrategy{cap, g_star(sol.mean, ctx), sol.p, sol.mean};
    eq.residual = sol.residual;
    return eq;
}

std::vector<double> best_response_oracle(double alpha_minus, const GameContext& ctx,
                                         const Policy& policy, long grid_n) {
    if (grid_n < 1) throw ConfigError("best_response_oracle needs a positive grid");

    std::vector<double> candidates;
    candidates.reserve(static_cast<size_t>(grid_n) + 2);
    for (long k = 1; k <= grid_n; ++k) {
        candidates.push_back(static_cast<double>(k) / static_cast<double>(grid_n));
    }
    if (policy.alpha_tilde > 0.0) candidates.push_back(policy.alpha_tilde);
    candidates.push_back(g_star(alpha_minus, ctx));

    std::vector<double> utilities;
    utilities.reserve(candidates.size());
    double best = -std::numeric_limits<double>::infinity();
    for (double a : candidates) {
        utilities.push_back(utility_si(a, alpha_minus, ctx, policy));
        best = std::max(best, utilities.back());
    }
    std::vector<double> argmax;
    for (size_t k = 0; k < candidates.size(); ++k) {
        if (utilities[k] >= best - 1e-9) argmax.push_back(candidates[k]);
    }
    std::sort(argmax.begin(), argmax.end());
    argmax.erase(std::unique(argmax.begin(), argmax.end()), argmax.end());
    return argmax;
}

double estimate_sensitivity(double observed_alpha_bar, double s_hat, double i_hat, double r_hat,
                            double alpha_r_star, double beta) {
    if (!(observed_alpha_bar > 0.0 && observed_alpha_bar < 1.0)) {
        throw NumericsError("observed voluntary level must lie strictly inside (0,1); "
                            "the inversion is degenerate at the boundary");
    }
    if (!(i_hat > 0.0)) {
        throw NumericsError("sensitivity is unidentifiable without infections");
    }
    if (!(beta > 0.0)) throw NumericsError("beta must be > 0");
    const double a = observed_alpha_bar;
    const double pool = a * (s_hat + i_hat) + alpha_r_star * r_hat;
    return pool * (1.0 - a) / (beta * a * a * i_hat);
}

} // namespace sdg

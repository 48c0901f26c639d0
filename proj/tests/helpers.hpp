#pragma once

// Test-only utilities: deterministic samplers and an independently written
// reference integrator. The reference code transcribes the model equations
// from scratch so it can serve as an oracle for the production path.

#include <cmath>
#include <random>
#include <vector>

#include "sdgame/game.hpp"
#include "sdgame/model.hpp"

namespace sdg::test {

inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1)));
    }
    return out;
}

/// Deterministic random instances for property tests.
class Sampler {
public:
    explicit Sampler(uint32_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    EpidemicState state(double i_min = 1e-4) {
        const double ws = uniform(0.05, 1.0);
        const double wi = uniform(i_min, 0.5);
        const double wq = uniform(0.0, 0.3);
        const double wr = uniform(0.0, 1.0);
        const double total = ws + wi + wq + wr;
        EpidemicState st;
        st.s = ws / total;
        st.i = wi / total;
        st.q = wq / total;
        st.r = 1.0 - st.s - st.i - st.q;
        return st;
    }

    ModelParams params() {
        ModelParams p;
        p.beta = uniform(0.15, 1.0);
        p.gamma1 = uniform(0.05, 0.5);
        p.gamma2 = uniform(0.02, 0.5);
        p.d = log_uniform(1.0, 5000.0);
        return p;
    }

    Policy policy() {
        return Policy{uniform(0.02, 1.0), uniform(0.0, 1.5)};
    }

    GameContext context() {
        const EpidemicState st = state();
        GameContext ctx;
        ctx.s_hat = st.s;
        ctx.i_hat = st.i;
        ctx.q_hat = st.q;
        ctx.r_hat = st.r;
        ctx.alpha_r_star = uniform(0.05, 1.0);
        ctx.beta_d = log_uniform(0.5, 3000.0);
        return ctx;
    }

private:
    std::mt19937 rng_;
};

/// Reference right-hand side, transcribed directly from the dynamic system:
///   ds/dt = -beta a_s s a_i i / (a_s s + a_i i + a_r r)
///   di/dt = +force - gamma1 i ; dq/dt = gamma1 i - gamma2 q ; dr/dt = gamma2 q
struct RefDelta {
    double ds, di, dq, dr;
};

inline RefDelta reference_rhs(double s, double i, double q, double r, double a_si, double a_r,
                              const ModelParams& p) {
    const double pool = a_si * s + a_si * i + a_r * r;
    const double force = p.beta * (a_si * s) * (a_si * i) / pool;
    return RefDelta{-force, force - p.gamma1 * i, p.gamma1 * i - p.gamma2 * q, p.gamma2 * q};
}

/// Reference RK4 over whole days, independent of the production integrator.
inline EpidemicState reference_integrate(EpidemicState st, double a_si, double a_r,
                                         const ModelParams& p, int days, double h = 0.1) {
    const int steps_per_day = static_cast<int>(1.0 / h + 0.5);
    for (int day = 0; day < days; ++day) {
        for (int n = 0; n < steps_per_day; ++n) {
            const RefDelta k1 = reference_rhs(st.s, st.i, st.q, st.r, a_si, a_r, p);
            const RefDelta k2 = reference_rhs(st.s + 0.5 * h * k1.ds, st.i + 0.5 * h * k1.di,
                                              st.q + 0.5 * h * k1.dq, st.r + 0.5 * h * k1.dr,
                                              a_si, a_r, p);
            const RefDelta k3 = reference_rhs(st.s + 0.5 * h * k2.ds, st.i + 0.5 * h * k2.di,
                                              st.q + 0.5 * h * k2.dq, st.r + 0.5 * h * k2.dr,
                                              a_si, a_r, p);
            const RefDelta k4 = reference_rhs(st.s + h * k3.ds, st.i + h * k3.di,
                                              st.q + h * k3.dq, st.r + h * k3.dr, a_si, a_r, p);
            st.s += h / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
            st.i += h / 6.0 * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di);
            st.q += h / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
            st.r += h / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
            st.t += h;
        }
    }
    return st;
}

// Two reference epidemic states (early outbreak and near the prevalence
// peak) reused across the game tests.
inline EpidemicState early_state() {
    EpidemicState st;
    st.s = 0.9431;
    st.i = 0.0356;
    st.q = 0.0168;
    st.r = 0.0045;
    return st;
}

inline EpidemicState peak_state() {
    EpidemicState st;
    st.s = 0.5885;
    st.i = 0.1233;
    st.q = 0.1656;
    st.r = 0.1226;
    return st;
}

} // namespace sdg::test

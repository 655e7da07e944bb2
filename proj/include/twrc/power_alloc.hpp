// power_alloc.hpp -- per-fading-state terminal power allocation maximizing
// the worst-link instantaneous exponent under a total power budget. The
// objective is quasi-concave in sqrt-power coordinates, so the optimum is
// found by bisection over convex feasibility problems; in squared
// coordinates each level set is a two-variable linear system decided exactly
// by vertex enumeration. Fading-averaged curves come from seeded Monte Carlo.

#ifndef TWRC_POWER_ALLOC_HPP
#define TWRC_POWER_ALLOC_HPP

#include "twrc/channel.hpp"
#include "twrc/rate_alloc.hpp"

#include <cstdint>
#include <optional>

namespace twrc {

struct PowerProblem {
    FadingState state;
    double p_relay = 1.0;
    double total_power = 1.0;
    double rho = 1.0;       // (0, 1]; 0 makes every exponent identically 0
    RatePair rates;
};

struct PowerSolution {
    double p1 = 0.0;
    double p2 = 0.0;
    double instantaneous_exponent = 0.0; // worst link at (p1, p2), recomputed
    int iterations = 0;                  // bisection steps taken
    double gap = 0.0;                    // final bracket width, nats
};

// Level-set data for one trial value t: the exponent constraint for link k
// becomes p_k / denom_k >= v_k, linear in the powers.
struct FeasibilitySpec {
    double t = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
};

struct FeasibilityResult {
    bool feasible = false;
    double p1 = 0.0; // witness, valid when feasible
    double p2 = 0.0;
};

// Exact-SNR instantaneous exponent rho*ln(1 + snr/(1+rho)) - 2*rho*R_k for
// one link at explicit terminal powers; may be negative.
double instantaneous_exponent(double p1, double p2, const PowerProblem& prob, Link link);

// v_k = (1+rho)/(p_relay a1 a2) * (exp((t + 2 rho R_k)/rho) - 1).
FeasibilitySpec make_feasibility_spec(double t, const PowerProblem& prob);

// Decides whether some power pair within the budget keeps both link
// exponents at or above spec.t; returns a witness when one exists.
FeasibilityResult feasibility(const FeasibilitySpec& spec, const PowerProblem& prob);

// Bisection between a feasible t_min and an infeasible t_max until the gap
// drops below eps; returns the last feasible witness. Throws BracketError if
// t_max is feasible.
PowerSolution optimize_power(const PowerProblem& prob, double eps,
                             double t_min, double t_max);

// Same, with the default bracket: t_min from the uniform split (P/2, P/2)
// and t_max from the single-link ideal-SNR bound at full budget, which no
// feasible allocation can reach.
PowerSolution optimize_power(const PowerProblem& prob, double eps = 1e-5);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// E over fading of max over rho in [0,1] of the optimally-powered worst-link
// exponent (power solved per rho, then the scalar rho search; negative
// maxima clamp to the rho = 0 value of zero). The fading stream is
// pre-generated from the seed and reduced in sample order, so the estimate
// is identical for every worker count; workers = 0 picks the hardware
// default.
MonteCarloEstimate averaged_optimized_exponent(const ChannelConfig& cfg,
                                               const RatePair& rates,
                                               std::size_t n_samples,
                                               std::uint64_t seed,
                                               double eps = 1e-5,
                                               std::size_t workers = 0);

// Baseline with the power pair fixed at (P/2, P/2).
MonteCarloEstimate averaged_uniform_exponent(const ChannelConfig& cfg,
                                             const RatePair& rates,
                                             std::size_t n_samples,
                                             std::uint64_t seed,
                                             std::size_t workers = 0);

} // namespace twrc

#endif // TWRC_POWER_ALLOC_HPP
